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

#include "corrpoly.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "corrpoly/dataset.hpp"
#include "corrpoly/error.hpp"
#include "corrpoly/polytope.hpp"
#include "corrpoly/report.hpp"

struct cp_system {
  corrpoly::CorrelationPolytope polytope;
};

struct cp_dataset {
  corrpoly::Dataset dataset;
};

struct cp_report {
  corrpoly::ClassificationReport report;
};

namespace {

using corrpoly::Rational;

thread_local std::string last_error;

// Raised inside the API layer for null handles and bad enum values.
class ArgumentError : public corrpoly::Error {
 public:
  using Error::Error;
};

template <class Body>
cp_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return CP_OK;
  } catch (const corrpoly::ParseError& e) {
    last_error = e.what();
    return CP_ERR_INPUT;
  } catch (const corrpoly::SizeCapError& e) {
    last_error = e.what();
    return CP_ERR_SIZE_CAP;
  } catch (const corrpoly::DimensionError& e) {
    last_error = e.what();
    return CP_ERR_DIMENSION;
  } catch (const corrpoly::IoError& e) {
    last_error = e.what();
    return CP_ERR_IO;
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return CP_ERR_ARGUMENT;
  } catch (const corrpoly::NotFoundError& e) {
    last_error = e.what();
    return CP_ERR_NOT_FOUND;
  } catch (const corrpoly::DomainError& e) {
    last_error = e.what();
    return CP_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CP_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw ArgumentError(std::string(what) + " must not be null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

corrpoly::OutputFormat to_format(cp_format f) {
  switch (f) {
    case CP_FORMAT_TABLE:
      return corrpoly::OutputFormat::Table;
    case CP_FORMAT_STRUCTURED:
      return corrpoly::OutputFormat::Structured;
  }
  throw ArgumentError("unknown output format");
}

corrpoly::ConceptSystem make_system(unsigned n, const unsigned* pairs, size_t pair_count) {
  if (pair_count > 0) require(pairs, "pairs");
  std::vector<corrpoly::IndexPair> ps;
  for (size_t k = 0; k < pair_count; ++k) ps.push_back({pairs[2 * k], pairs[2 * k + 1]});
  return corrpoly::ConceptSystem(n, std::move(ps));
}

corrpoly::CorrelationVector read_point(const cp_system* system, const char* const* coords,
                                       size_t count) {
  require(system, "system");
  if (count > 0) require(coords, "coords");
  corrpoly::Vector v;
  for (size_t k = 0; k < count; ++k) {
    require(coords[k], "coordinate");
    v.push_back(Rational::parse(coords[k]));
  }
  return corrpoly::CorrelationVector::from_coordinates(system->polytope.system(), v);
}

corrpoly::CorrelationVector read_pair_point(const char* p1, const char* p2, const char* p12) {
  require(p1, "p1");
  require(p2, "p2");
  require(p12, "p12");
  return corrpoly::CorrelationVector::of_pair(Rational::parse(p1), Rational::parse(p2),
                                              Rational::parse(p12));
}

std::string certificate_json(const corrpoly::MembershipVerdict& v,
                             const corrpoly::ConceptSystem& system) {
  using Json = nlohmann::ordered_json;
  Json doc{{"verdict", v.inside() ? "inside" : "outside"}};
  if (v.inside()) {
    Json weights = Json::array();
    for (const auto& w : v.decomposition->weights) weights.push_back(w.to_string());
    doc["decomposition"] = std::move(weights);
  } else {
    Json coeffs = Json::array();
    for (const auto& c : v.witness->inequality.coefficients) coeffs.push_back(c.to_string());
    doc["witness"] = Json{{"coefficients", std::move(coeffs)},
                          {"bound", v.witness->inequality.bound.to_string()},
                          {"violation", v.witness->violation.to_string()},
                          {"text", corrpoly::render_inequality(v.witness->inequality, system)}};
  }
  return doc.dump();
}

}  // namespace

extern "C" {

const char* cp_version(void) { return "1.0.0"; }

const char* cp_last_error(void) { return last_error.c_str(); }

void cp_string_free(char* s) { std::free(s); }

cp_status cp_system_create(unsigned concept_count, const unsigned* pairs, size_t pair_count,
                           cp_system** out) {
  return cp_system_create_with_limits(concept_count, pairs, pair_count, 0, 0, out);
}

cp_status cp_system_create_with_limits(unsigned concept_count, const unsigned* pairs,
                                       size_t pair_count, unsigned max_concepts,
                                       unsigned max_facet_concepts, cp_system** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    corrpoly::Limits limits;
    if (max_concepts != 0) limits.max_concepts = max_concepts;
    if (max_facet_concepts != 0) limits.max_facet_concepts = max_facet_concepts;
    *out = new cp_system{
        corrpoly::CorrelationPolytope(make_system(concept_count, pairs, pair_count), limits)};
  });
}

void cp_system_free(cp_system* system) { delete system; }

size_t cp_system_dimension(const cp_system* system) {
  return system == nullptr ? 0 : system->polytope.dimension();
}

cp_status cp_membership(const cp_system* system, const char* const* coords, size_t count,
                        int* inside, cp_boundary* on_boundary, char** certificate) {
  return guarded([&] {
    require(inside, "inside");
    auto p = read_point(system, coords, count);
    auto verdict = system->polytope.membership(p);
    *inside = verdict.inside() ? 1 : 0;
    if (on_boundary != nullptr) {
      if (!verdict.inside()) {
        *on_boundary = CP_BOUNDARY_NO;
      } else if (!verdict.on_boundary) {
        *on_boundary = CP_BOUNDARY_UNKNOWN;
      } else {
        *on_boundary = *verdict.on_boundary ? CP_BOUNDARY_YES : CP_BOUNDARY_NO;
      }
    }
    if (certificate != nullptr) {
      *certificate = copy_out(certificate_json(verdict, system->polytope.system()));
    }
  });
}

cp_status cp_violation_magnitude(const cp_system* system, const char* const* coords, size_t count,
                                 char** magnitude) {
  return guarded([&] {
    require(magnitude, "magnitude");
    auto p = read_point(system, coords, count);
    *magnitude = copy_out(system->polytope.violation_magnitude(p).to_string());
  });
}

cp_status cp_facets(const cp_system* system, cp_format format, char** out, size_t* facet_count) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    std::string text = corrpoly::render_facets(system->polytope.system(),
                                               system->polytope.limits(), to_format(format));
    if (facet_count != nullptr) *facet_count = system->polytope.facets().size();
    *out = copy_out(text);
  });
}

cp_status cp_witness(const char* p1, const char* p2, const char* p12, cp_format format, char** out,
                     int* inside) {
  return guarded([&] {
    require(out, "out");
    auto report = corrpoly::witness_n2(read_pair_point(p1, p2, p12));
    std::string text = corrpoly::render_witness(report, to_format(format));
    if (inside != nullptr) *inside = report.verdict.inside() ? 1 : 0;
    *out = copy_out(text);
  });
}

cp_status cp_overextension(const char* p1, const char* p2, const char* p12, char** degree) {
  return guarded([&] {
    require(degree, "degree");
    *degree = copy_out(corrpoly::overextension_degree(read_pair_point(p1, p2, p12)).to_string());
  });
}

cp_status cp_dataset_bundled(cp_dataset** out) {
  return guarded([&] {
    require(out, "out");
    *out = new cp_dataset{corrpoly::bundled_hampton_dataset()};
  });
}

cp_status cp_dataset_parse(const char* pairs_csv, const char* items_csv, cp_dataset** out) {
  return guarded([&] {
    require(out, "out");
    require(items_csv, "items_csv");
    *out = nullptr;
    if (pairs_csv == nullptr) {
      *out = new cp_dataset{corrpoly::parse_dataset(items_csv)};
    } else {
      auto pairs = corrpoly::parse_pairs(pairs_csv);
      *out = new cp_dataset{
          corrpoly::parse_dataset(items_csv, std::span<const corrpoly::ConceptPair>(pairs))};
    }
  });
}

cp_status cp_dataset_load(const char* pairs_path, const char* items_path, cp_dataset** out) {
  return guarded([&] {
    require(out, "out");
    require(items_path, "items_path");
    *out = nullptr;
    *out = new cp_dataset{
        corrpoly::load_dataset(items_path, pairs_path == nullptr ? std::string() : pairs_path)};
  });
}

void cp_dataset_free(cp_dataset* dataset) { delete dataset; }

size_t cp_dataset_pair_count(const cp_dataset* dataset) {
  return dataset == nullptr ? 0 : dataset->dataset.pairs.size();
}

size_t cp_dataset_item_count(const cp_dataset* dataset) {
  return dataset == nullptr ? 0 : dataset->dataset.items.size();
}

int cp_dataset_has_pair(const cp_dataset* dataset, const char* pair_id) {
  if (dataset == nullptr || pair_id == nullptr) return 0;
  return dataset->dataset.find_pair(pair_id) != nullptr ? 1 : 0;
}

cp_status cp_dataset_to_csv(const cp_dataset* dataset, char** pairs_csv, char** items_csv) {
  return guarded([&] {
    require(dataset, "dataset");
    if (pairs_csv != nullptr) *pairs_csv = copy_out(corrpoly::pairs_to_csv(dataset->dataset.pairs));
    if (items_csv != nullptr) *items_csv = copy_out(corrpoly::items_to_csv(dataset->dataset.items));
  });
}

cp_status cp_classify(const cp_dataset* dataset, const char* pair_id, unsigned threads,
                      cp_report** out) {
  return guarded([&] {
    require(dataset, "dataset");
    require(out, "out");
    *out = nullptr;
    std::optional<std::string_view> filter;
    if (pair_id != nullptr) filter = pair_id;
    *out = new cp_report{corrpoly::classify(dataset->dataset, filter, threads)};
  });
}

void cp_report_free(cp_report* report) { delete report; }

size_t cp_report_total(const cp_report* report) {
  return report == nullptr ? 0 : report->report.summary.total;
}

size_t cp_report_inside_count(const cp_report* report) {
  return report == nullptr ? 0 : report->report.summary.inside_count;
}

size_t cp_report_outside_count(const cp_report* report) {
  return report == nullptr ? 0 : report->report.summary.outside_count;
}

size_t cp_report_mismatch_count(const cp_report* report) {
  return report == nullptr ? 0 : report->report.summary.mismatches.size();
}

cp_status cp_report_render(const cp_report* report, cp_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_out(corrpoly::render_report(report->report, to_format(format)));
  });
}

cp_status cp_plotdata(const cp_dataset* dataset, const char* pair_id, char** out_json) {
  return guarded([&] {
    require(dataset, "dataset");
    require(pair_id, "pair_id");
    require(out_json, "out_json");
    *out_json = copy_out(corrpoly::plot_data(dataset->dataset, pair_id));
  });
}

}  // extern "C"
