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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corrpoly/polytope.hpp"
#include "corrpoly/rational.hpp"

namespace corrpoly {

enum class ExpectedLabel { Classical, Nonclassical };

/// "c" / "q"
std::string_view label_code(ExpectedLabel label);

struct ConceptPair {
  std::string pair_id;
  std::string name_a1;
  std::string name_a2;
  std::string name_conjunction;

  friend bool operator==(const ConceptPair&, const ConceptPair&) = default;
};

/// One measured item: mu(A1), mu(A2), mu(A1 and A2) for a concept pair.
struct ItemRecord {
  std::string pair_id;
  std::string item_name;
  Rational mu_a1;
  Rational mu_a2;
  Rational mu_and;
  std::optional<ExpectedLabel> expected_label;

  CorrelationVector correlation() const { return CorrelationVector::of_pair(mu_a1, mu_a2, mu_and); }

  friend bool operator==(const ItemRecord&, const ItemRecord&) = default;
};

struct Dataset {
  std::vector<ConceptPair> pairs;
  std::vector<ItemRecord> items;

  const ConceptPair* find_pair(std::string_view pair_id) const;
  const ItemRecord* find_item(std::string_view pair_id, std::string_view item_name) const;
  /// Items of one pair in dataset order.
  std::vector<ItemRecord> items_of(std::string_view pair_id) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

inline constexpr std::string_view kPairsHeader = "pair_id,name_a1,name_a2,name_conjunction";
inline constexpr std::string_view kItemsHeader =
    "pair_id,item_name,mu_a1,mu_a2,mu_and,expected_label";

/// Parses a pairs file. Empty input yields no pairs. Errors name the line
/// number and field.
std::vector<ConceptPair> parse_pairs(std::string_view csv_text);

/// Parses an items file against the given pairs; unknown pair ids are
/// errors. Without pairs, one ConceptPair is synthesized per distinct id
/// (names derived from the id) in order of first appearance.
Dataset parse_dataset(std::string_view items_csv,
                      std::optional<std::span<const ConceptPair>> pairs = std::nullopt);

/// Reads and parses files from disk; pairs_path may be empty.
Dataset load_dataset(const std::string& items_path, const std::string& pairs_path = {});

std::string pairs_to_csv(std::span<const ConceptPair> pairs);
std::string items_to_csv(std::span<const ItemRecord> items);

/// The six concept pairs and 96 items of Hampton's experiment 4 as printed,
/// with their classical / non-classical labels. Parsed once, then shared.
const Dataset& bundled_hampton_dataset();

/// The embedded CSV texts behind bundled_hampton_dataset().
std::string_view bundled_pairs_csv();
std::string_view bundled_items_csv();

}  // namespace corrpoly
