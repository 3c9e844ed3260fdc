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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "corrpoly/dataset.hpp"
#include "corrpoly/error.hpp"

using namespace corrpoly;

namespace {

const std::string kItemsHead = std::string(kItemsHeader) + "\n";

std::string error_of(std::string_view items) {
  try {
    (void)parse_dataset(items);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& text)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path, std::ios::binary) << text;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("a single row parses to exact weights") {
  auto ds = parse_dataset(kItemsHead + "bird_pet,Cuckoo,1,0.575,0.8421,q\n");
  REQUIRE(ds.items.size() == 1);
  const auto& r = ds.items[0];
  CHECK(r.mu_a1 == Rational(1));
  CHECK(r.mu_a2 == Rational(23, 40));
  CHECK(r.mu_and == Rational(8421, 10000));
  CHECK(r.expected_label == ExpectedLabel::Nonclassical);
  CHECK(r.correlation() == CorrelationVector::of_pair(Rational(1), Rational(23, 40),
                                                      Rational(8421, 10000)));
  // Pair synthesized from the id.
  REQUIRE(ds.pairs.size() == 1);
  CHECK(ds.pairs[0].pair_id == "bird_pet");
}

TEST_CASE("malformed items name the line and field") {
  CHECK(error_of(kItemsHead + "p,x,0.5,0.5,1.2,q\n") ==
        "line 2, field mu_and: value 1.2 outside [0,1]");
  CHECK(error_of(kItemsHead + "p,x,0.5,abc,0.1,q\n").find("line 2, field mu_a2") == 0);
  CHECK(error_of(kItemsHead + "p,x,0.5,0.5,-0.1,\n").find("field mu_and") != std::string::npos);
  CHECK(error_of(kItemsHead + "p,x,0.5,0.5\n").find("expected 6 fields") != std::string::npos);
  CHECK(error_of(kItemsHead + "p,x,0.5,0.5,0.1,z\n").find("field expected_label") !=
        std::string::npos);
  CHECK(error_of(kItemsHead + "p,,0.5,0.5,0.1,c\n").find("field item_name") != std::string::npos);
  CHECK(error_of(kItemsHead + "p,x,0.5,0.5,0.1,c\np,x,0.1,0.1,0.1,c\n")
            .find("line 3, field item_name: duplicate") == 0);
  CHECK(error_of("pair,item\np,x\n").find("line 1") == 0);
  CHECK(error_of(kItemsHead + "p,\"x,0.5,0.5,0.1,c\n").find("unterminated") != std::string::npos);
}

TEST_CASE("empty input and blank lines") {
  CHECK(parse_dataset("").items.empty());
  CHECK(parse_dataset(kItemsHead).items.empty());
  CHECK(parse_pairs("").empty());
  auto ds = parse_dataset(kItemsHead + "\np,x,0.5,0.5,0.1,\n\n");
  REQUIRE(ds.items.size() == 1);
  CHECK_FALSE(ds.items[0].expected_label.has_value());
}

TEST_CASE("quoting, byte order marks and CRLF") {
  auto ds = parse_dataset("\xEF\xBB\xBF" + std::string(kItemsHeader) +
                          "\r\np,\"Sofa, \"\"large\"\"\",0.5,0.5,0.1,c\r\n");
  REQUIRE(ds.items.size() == 1);
  CHECK(ds.items[0].item_name == "Sofa, \"large\"");
  CHECK(ds.items[0].mu_a1 == Rational(1, 2));
}

TEST_CASE("pairs files") {
  auto pairs = parse_pairs(std::string(kPairsHeader) + "\nfp,Food,Plant,\"Food, Plant\"\n");
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].name_conjunction == "Food, Plant");
  CHECK_THROWS_AS(parse_pairs(std::string(kPairsHeader) + "\nfp,a,b,c\nfp,a,b,c\n"), ParseError);
  CHECK_THROWS_AS(parse_pairs("id,a,b,c\n"), ParseError);

  std::span<const ConceptPair> known(pairs);
  CHECK_NOTHROW(parse_dataset(kItemsHead + "fp,x,0,0,0,c\n", known));
  try {
    (void)parse_dataset(kItemsHead + "zz,x,0,0,0,c\n", known);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "line 2, field pair_id: unknown pair_id 'zz'");
  }
}

TEST_CASE("bundled table") {
  const auto& ds = bundled_hampton_dataset();
  CHECK(&ds == &bundled_hampton_dataset());
  CHECK(ds.pairs.size() == 6);
  CHECK(ds.items.size() == 96);
  CHECK(ds.pairs.front().pair_id == "furniture_household");
  CHECK(ds.pairs.back().pair_id == "bird_pet");
  std::size_t c = 0;
  for (const auto& it : ds.items) c += it.expected_label == ExpectedLabel::Classical ? 1 : 0;
  CHECK(c == 21);
  for (const auto& p : ds.pairs) CHECK(ds.items_of(p.pair_id).size() == 16);

  const auto* filing = ds.find_item("furniture_household", "Filing Cabinet");
  REQUIRE(filing != nullptr);
  CHECK(filing->mu_a1 == Rational(9744, 10000));
  const auto* parakeet = ds.find_item("bird_pet", "Parakeet");
  REQUIRE(parakeet != nullptr);
  CHECK(parakeet->expected_label == ExpectedLabel::Classical);
  CHECK(ds.find_item("building_dwelling", "Phone box")->mu_and == Rational(2778, 100000));
  CHECK(ds.find_item("weapon_tool", "Spoon")->mu_a2 == Rational(752, 1000));
  // Names kept exactly as printed.
  CHECK(ds.find_item("building_dwelling", "Palena") != nullptr);
  CHECK(ds.find_item("building_dwelling", "Bown") != nullptr);
  CHECK(ds.find_item("building_dwelling", "LogCabin") != nullptr);
  CHECK(ds.find_item("machine_vehicle", "Course liner") != nullptr);
  CHECK(ds.find_item("bird_pet", "Filing Cabinet") == nullptr);
  CHECK(ds.find_pair("nope") == nullptr);
}

TEST_CASE("CSV round trip") {
  const auto& ds = bundled_hampton_dataset();
  const auto pairs_text = pairs_to_csv(ds.pairs);
  const auto items_text = items_to_csv(ds.items);
  auto pairs = parse_pairs(pairs_text);
  auto again = parse_dataset(items_text, std::span<const ConceptPair>(pairs));
  CHECK(again == ds);
  CHECK(items_to_csv(again.items) == items_text);
  CHECK(items_text.find("0.02778") != std::string::npos);

  std::vector<ItemRecord> odd{{"p", "Sofa, \"big\"", Rational(1, 3), Rational(0), Rational(0), {}}};
  auto text = items_to_csv(odd);
  auto back = parse_dataset(text);
  CHECK(back.items == odd);
}

TEST_CASE("loading from files") {
  TempFile pairs("corrpoly_test_pairs.csv", std::string(kPairsHeader) + "\nfp,Food,Plant,Both\n");
  TempFile items("corrpoly_test_items.csv", kItemsHead + "fp,Steak,1,0,0,c\n");
  auto ds = load_dataset(items.path.string(), pairs.path.string());
  CHECK(ds.pairs[0].name_a1 == "Food");
  CHECK(ds.items.size() == 1);
  CHECK(load_dataset(items.path.string()).pairs[0].name_a1 == "fp A1");

  CHECK_THROWS_AS(load_dataset("/nonexistent/items.csv"), IoError);
  CHECK_THROWS_AS(load_dataset(items.path.string(), "/nonexistent/pairs.csv"), IoError);

  TempFile bad("corrpoly_test_bad.csv", kItemsHead + "fp,Steak,1,0,2,c\n");
  try {
    (void)load_dataset(bad.path.string());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(bad.path.string() + ": line 2, field mu_and") == 0);
  }
}
