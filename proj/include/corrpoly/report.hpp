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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corrpoly/dataset.hpp"
#include "corrpoly/polytope.hpp"

namespace corrpoly {

enum class OutputFormat { Table, Structured };

/// Verdict and diagnostics for one dataset item.
struct ItemClassification {
  ItemRecord item;
  MembershipVerdict verdict;
  FacetCheck facets;  // the four boundary inequalities at the item's point
  Rational overextension_degree;
  Rational violation_magnitude;
  std::optional<bool> matched_expected;
};

struct MismatchEntry {
  std::string pair_id;
  std::string item_name;
};

struct ClassificationSummary {
  std::size_t total = 0;
  std::size_t inside_count = 0;
  std::size_t outside_count = 0;
  std::vector<MismatchEntry> mismatches;
};

struct ClassificationReport {
  std::vector<ItemClassification> entries;  // dataset order
  ClassificationSummary summary;
};

/// Classifies every item (optionally one pair only) against c(2,{(1,2)}).
/// Work fans out over up to max_threads workers (0 = hardware concurrency);
/// entries always come back in dataset order. Throws NotFoundError for an
/// unknown pair filter.
ClassificationReport classify(const Dataset& dataset,
                              std::optional<std::string_view> pair_filter = std::nullopt,
                              unsigned max_threads = 0);

/// Full diagnosis of one two-concept point.
struct WitnessReport {
  CorrelationVector point;
  MembershipVerdict verdict;
  FacetCheck facets;
  std::optional<FiniteMeasureSpace> measure_space;  // inside only
  Rational overextension_degree;
  Rational violation_magnitude;
};

WitnessReport witness_n2(const CorrelationVector& point);

/// Plot data for one pair: polytope vertices, edges and the item points.
/// Throws NotFoundError for an unknown pair.
std::string plot_data(const Dataset& dataset, std::string_view pair_id);

std::string render_report(const ClassificationReport& report, OutputFormat format);
std::string render_witness(const WitnessReport& report, OutputFormat format);
std::string render_facets(const ConceptSystem& system, const Limits& limits, OutputFormat format);

/// Two-concept inequality in membership notation, e.g.
/// "mu(A1 and A2) <= mu(A2)".
std::string render_membership_inequality(const Inequality& inequality);

}  // namespace corrpoly
