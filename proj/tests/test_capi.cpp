// Copyright 2026 The corrpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "corrpoly.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  cp_string_free(s);
  return out;
}

bool contains(const std::string& text, const char* needle) {
  return text.find(needle) != std::string::npos;
}

const unsigned kPair12[] = {1, 2};

}  // namespace

TEST_CASE("version") { CHECK(std::string(cp_version()) == "1.0.0"); }

TEST_CASE("systems") {
  cp_system* s = nullptr;
  REQUIRE(cp_system_create(2, kPair12, 1, &s) == CP_OK);
  CHECK(cp_system_dimension(s) == 3);
  cp_system_free(s);

  const unsigned bad[] = {2, 1};
  CHECK(cp_system_create(2, bad, 1, &s) == CP_ERR_DIMENSION);
  CHECK(s == nullptr);
  CHECK(contains(cp_last_error(), "pair"));
  CHECK(cp_system_create(0, nullptr, 0, &s) == CP_ERR_DIMENSION);
  CHECK(cp_system_create(2, nullptr, 1, &s) == CP_ERR_ARGUMENT);
  CHECK(cp_system_create(2, kPair12, 1, nullptr) == CP_ERR_ARGUMENT);
  CHECK(cp_system_create(17, nullptr, 0, &s) == CP_ERR_SIZE_CAP);
  CHECK(cp_system_create_with_limits(5, nullptr, 0, 4, 0, &s) == CP_ERR_SIZE_CAP);
  CHECK(cp_system_dimension(nullptr) == 0);
  cp_system_free(nullptr);
}

TEST_CASE("membership") {
  cp_system* s = nullptr;
  REQUIRE(cp_system_create(2, kPair12, 1, &s) == CP_OK);
  int inside = -1;
  cp_boundary boundary = CP_BOUNDARY_UNKNOWN;
  char* cert = nullptr;

  const char* cuckoo[] = {"1", "0.575", "0.8421"};
  REQUIRE(cp_membership(s, cuckoo, 3, &inside, &boundary, &cert) == CP_OK);
  CHECK(inside == 0);
  CHECK(boundary == CP_BOUNDARY_NO);
  auto text = take(cert);
  CHECK(contains(text, "\"verdict\":\"outside\""));
  CHECK(contains(text, "p12 - p2 <= 0"));

  const char* cave[] = {"0.2821", "0.95", "0.2821"};
  REQUIRE(cp_membership(s, cave, 3, &inside, &boundary, nullptr) == CP_OK);
  CHECK(inside == 1);
  CHECK(boundary == CP_BOUNDARY_YES);

  const char* half[] = {"1/2", "1/2", "1/4"};
  REQUIRE(cp_membership(s, half, 3, &inside, &boundary, &cert) == CP_OK);
  CHECK(boundary == CP_BOUNDARY_NO);
  CHECK(contains(take(cert), "\"decomposition\":[\"1/4\",\"1/4\",\"1/4\",\"1/4\"]"));

  char* magnitude = nullptr;
  REQUIRE(cp_violation_magnitude(s, cuckoo, 3, &magnitude) == CP_OK);
  CHECK(take(magnitude) == "2671/20000");

  CHECK(cp_membership(s, cuckoo, 2, &inside, nullptr, nullptr) == CP_ERR_DIMENSION);
  const char* junk[] = {"1", "x", "0"};
  CHECK(cp_membership(s, junk, 3, &inside, nullptr, nullptr) == CP_ERR_INPUT);
  CHECK(contains(cp_last_error(), "x"));
  const char* holes[] = {"1", nullptr, "0"};
  CHECK(cp_membership(s, holes, 3, &inside, nullptr, nullptr) == CP_ERR_ARGUMENT);
  CHECK(cp_membership(nullptr, cuckoo, 3, &inside, nullptr, nullptr) == CP_ERR_ARGUMENT);
  CHECK(cp_membership(s, cuckoo, 3, nullptr, nullptr, nullptr) == CP_ERR_ARGUMENT);
  cp_system_free(s);
}

TEST_CASE("boundary is unknown beyond the facet cap") {
  cp_system* s = nullptr;
  const unsigned all3[] = {1, 2, 1, 3, 2, 3};
  REQUIRE(cp_system_create_with_limits(3, all3, 3, 0, 2, &s) == CP_OK);
  const char* origin[] = {"0", "0", "0", "0", "0", "0"};
  int inside = 0;
  cp_boundary boundary = CP_BOUNDARY_NO;
  REQUIRE(cp_membership(s, origin, 6, &inside, &boundary, nullptr) == CP_OK);
  CHECK(inside == 1);
  CHECK(boundary == CP_BOUNDARY_UNKNOWN);
  char* out = nullptr;
  CHECK(cp_facets(s, CP_FORMAT_TABLE, &out, nullptr) == CP_ERR_SIZE_CAP);
  cp_system_free(s);

  // The two-concept boundary comes from the four fixed inequalities.
  REQUIRE(cp_system_create_with_limits(2, kPair12, 1, 0, 1, &s) == CP_OK);
  REQUIRE(cp_membership(s, origin, 3, &inside, &boundary, nullptr) == CP_OK);
  CHECK(boundary == CP_BOUNDARY_YES);
  cp_system_free(s);
}

TEST_CASE("facets") {
  cp_system* s = nullptr;
  const unsigned all3[] = {1, 2, 1, 3, 2, 3};
  REQUIRE(cp_system_create(3, all3, 3, &s) == CP_OK);
  char* out = nullptr;
  size_t count = 0;
  REQUIRE(cp_facets(s, CP_FORMAT_STRUCTURED, &out, &count) == CP_OK);
  CHECK(count == 16);
  CHECK(contains(take(out), "\"corrpoly.facets/1\""));
  CHECK(cp_facets(s, static_cast<cp_format>(9), &out, nullptr) == CP_ERR_ARGUMENT);
  cp_system_free(s);
}

TEST_CASE("witness and overextension") {
  char* out = nullptr;
  int inside = -1;
  REQUIRE(cp_witness("1", "0.575", "0.8421", CP_FORMAT_TABLE, &out, &inside) == CP_OK);
  CHECK(inside == 0);
  auto text = take(out);
  CHECK(contains(text, "mu(A1 and A2) <= mu(A2)"));
  CHECK(contains(text, "amount: 0.2671"));

  REQUIRE(cp_witness("1", "1", "1", CP_FORMAT_STRUCTURED, &out, &inside) == CP_OK);
  CHECK(inside == 1);
  CHECK(contains(take(out), "\"verdict\": \"inside\""));

  CHECK(cp_witness("1", "1", "1.5", CP_FORMAT_TABLE, &out, nullptr) == CP_OK);
  cp_string_free(out);
  CHECK(cp_witness("1", "1", "abc", CP_FORMAT_TABLE, &out, nullptr) == CP_ERR_INPUT);
  CHECK(cp_witness(nullptr, "1", "1", CP_FORMAT_TABLE, &out, nullptr) == CP_ERR_ARGUMENT);

  char* degree = nullptr;
  REQUIRE(cp_overextension("1", "0.575", "0.8421", &degree) == CP_OK);
  CHECK(take(degree) == "2671/10000");
  CHECK(cp_overextension("1", "1", "1", nullptr) == CP_ERR_ARGUMENT);
}

TEST_CASE("datasets and reports") {
  cp_dataset* ds = nullptr;
  REQUIRE(cp_dataset_bundled(&ds) == CP_OK);
  CHECK(cp_dataset_pair_count(ds) == 6);
  CHECK(cp_dataset_item_count(ds) == 96);
  CHECK(cp_dataset_has_pair(ds, "bird_pet") == 1);
  CHECK(cp_dataset_has_pair(ds, "nope") == 0);

  cp_report* report = nullptr;
  REQUIRE(cp_classify(ds, nullptr, 0, &report) == CP_OK);
  CHECK(cp_report_total(report) == 96);
  CHECK(cp_report_inside_count(report) == 21);
  CHECK(cp_report_outside_count(report) == 75);
  CHECK(cp_report_mismatch_count(report) == 0);
  char* out = nullptr;
  REQUIRE(cp_report_render(report, CP_FORMAT_TABLE, &out) == CP_OK);
  CHECK(contains(take(out), "total 96, inside 21, outside 75, mismatches 0"));
  cp_report_free(report);

  REQUIRE(cp_classify(ds, "machine_vehicle", 2, &report) == CP_OK);
  CHECK(cp_report_inside_count(report) == 5);
  cp_report_free(report);
  CHECK(cp_classify(ds, "nope", 0, &report) == CP_ERR_NOT_FOUND);
  CHECK(contains(cp_last_error(), "nope"));

  REQUIRE(cp_plotdata(ds, "building_dwelling", &out) == CP_OK);
  CHECK(contains(take(out), "\"inside_count\": 6"));
  CHECK(cp_plotdata(ds, "nope", &out) == CP_ERR_NOT_FOUND);

  char* pairs_csv = nullptr;
  char* items_csv = nullptr;
  REQUIRE(cp_dataset_to_csv(ds, &pairs_csv, &items_csv) == CP_OK);
  cp_dataset* copy = nullptr;
  REQUIRE(cp_dataset_parse(pairs_csv, items_csv, &copy) == CP_OK);
  CHECK(cp_dataset_item_count(copy) == 96);
  cp_string_free(pairs_csv);
  cp_string_free(items_csv);
  cp_dataset_free(copy);
  cp_dataset_free(ds);

  CHECK(cp_report_total(nullptr) == 0);
  cp_report_free(nullptr);
  cp_dataset_free(nullptr);
}

TEST_CASE("dataset errors") {
  cp_dataset* ds = nullptr;
  const char* items =
      "pair_id,item_name,mu_a1,mu_a2,mu_and,expected_label\n"
      "p,x,0.5,0.5,1.2,q\n";
  CHECK(cp_dataset_parse(nullptr, items, &ds) == CP_ERR_INPUT);
  CHECK(std::string(cp_last_error()) == "line 2, field mu_and: value 1.2 outside [0,1]");
  CHECK(cp_dataset_parse(nullptr, nullptr, &ds) == CP_ERR_ARGUMENT);
  CHECK(cp_dataset_load(nullptr, "/nonexistent/items.csv", &ds) == CP_ERR_IO);
  CHECK(cp_dataset_parse(nullptr, "", &ds) == CP_OK);
  CHECK(cp_dataset_item_count(ds) == 0);
  cp_dataset_free(ds);
}
