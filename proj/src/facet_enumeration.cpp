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

#include "facet_enumeration.hpp"

#include <algorithm>
#include <set>

#include "linalg.hpp"

namespace corrpoly::detail {
namespace {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t support(const Inequality& f) {
  return static_cast<std::size_t>(std::count_if(f.coefficients.begin(), f.coefficients.end(),
                                                [](const Rational& c) { return !c.is_zero(); }));
}

bool facet_order(const Inequality& a, const Inequality& b) {
  if (support(a) != support(b)) return support(a) < support(b);
  if (a.bound != b.bound) return a.bound < b.bound;
  return a.coefficients < b.coefficients;
}

// The tight vertices must affinely span a hyperplane.
bool spans_facet(const std::vector<Vertex>& vertices, const Inequality& f, std::size_t dimension) {
  const Vertex* base = nullptr;
  lp::Matrix diffs;
  for (const auto& v : vertices) {
    if (!f.slack(v.coords).is_zero()) continue;
    if (base == nullptr) {
      base = &v;
      continue;
    }
    Vector d(dimension);
    for (std::size_t k = 0; k < dimension; ++k) d[k] = v.coords[k] - base->coords[k];
    diffs.push_back(std::move(d));
  }
  return linalg::rank(std::move(diffs)) + 1 == dimension;
}

}  // namespace

std::vector<Inequality> enumerate_hull_facets(const std::vector<Vertex>& vertices,
                                              std::size_t dimension) {
  std::vector<Inequality> found;
  if (dimension == 0) return found;

  auto consider = [&](const std::vector<std::size_t>& subset) {
    // Rows (v, -1) . (a, b) = 0 for each chosen vertex.
    lp::Matrix m;
    m.reserve(subset.size());
    for (std::size_t idx : subset) {
      Vector row = vertices[idx].coords;
      row.emplace_back(-1);
      m.push_back(std::move(row));
    }
    auto line = linalg::kernel_line(std::move(m));
    if (!line) return;
    Inequality f{Vector(line->begin(), line->end() - 1), line->back()};
    if (std::all_of(f.coefficients.begin(), f.coefficients.end(),
                    [](const Rational& c) { return c.is_zero(); })) {
      return;
    }
    bool below = false;
    bool above = false;
    for (const auto& v : vertices) {
      int s = f.slack(v.coords).sign();
      below = below || s > 0;
      above = above || s < 0;
    }
    if (below && above) return;
    if (above) {
      for (auto& c : f.coefficients) c = -c;
      f.bound = -f.bound;
    }
    Rational scale;
    for (const auto& c : f.coefficients) {
      if (!c.is_zero()) {
        scale = c.abs();
        break;
      }
    }
    for (auto& c : f.coefficients) c /= scale;
    f.bound /= scale;
    if (std::find(found.begin(), found.end(), f) == found.end()) found.push_back(std::move(f));
  };
  for_each_subset(vertices.size(), dimension, consider);

  std::erase_if(found, [&](const Inequality& f) { return !spans_facet(vertices, f, dimension); });
  std::sort(found.begin(), found.end(), facet_order);
  return found;
}

}  // namespace corrpoly::detail
