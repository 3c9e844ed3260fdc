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

#include <set>

#include "corrpoly/error.hpp"
#include "corrpoly/polytope.hpp"
#include "test_support.hpp"

using namespace corrpoly;

namespace {

std::vector<std::string> rendered(const ConceptSystem& s) {
  std::vector<std::string> out;
  for (const auto& f : enumerate_facets(s)) out.push_back(render_inequality(f, s));
  return out;
}

// Every vertex satisfies the inequality and the tight vertices affinely
// span a hyperplane.
void check_is_facet(const Inequality& f, const std::vector<Vertex>& vertices, std::size_t d) {
  lp::Matrix tight;
  for (const auto& v : vertices) {
    Rational s = f.slack(v.coords);
    REQUIRE(s.sign() >= 0);
    if (s.is_zero()) {
      auto row = v.coords;
      row.emplace_back(1);
      tight.push_back(row);
    }
  }
  CHECK(testing::matrix_rank(tight) == d);
}

}  // namespace

TEST_CASE("two concepts give the four boundary inequalities in order") {
  CHECK(rendered(ConceptSystem::two_concepts()) ==
        std::vector<std::string>{"-p12 <= 0", "p12 - p1 <= 0", "p12 - p2 <= 0",
                                 "p1 + p2 - p12 <= 1"});
}

TEST_CASE("degenerate systems") {
  CHECK(rendered(ConceptSystem(1, {})) == std::vector<std::string>{"-p1 <= 0", "p1 <= 1"});
  auto square = rendered(ConceptSystem(2, {}));
  CHECK(square.size() == 4);
  CHECK(std::set<std::string>(square.begin(), square.end()) ==
        std::set<std::string>{"-p1 <= 0", "-p2 <= 0", "p1 <= 1", "p2 <= 1"});
}

TEST_CASE("facet counts") {
  CHECK(enumerate_facets(ConceptSystem::all_pairs(3)).size() == 16);
  CHECK(enumerate_facets(ConceptSystem(3, {{1, 2}})).size() == 6);
  CHECK(enumerate_facets(ConceptSystem(3, {{1, 2}, {2, 3}})).size() == 8);
  CHECK(enumerate_facets(ConceptSystem::all_pairs(4)).size() == 56);
}

TEST_CASE("enumerated inequalities are valid facets, normalized and distinct") {
  const std::vector<ConceptSystem> systems{ConceptSystem::two_concepts(), ConceptSystem::all_pairs(3),
                                           ConceptSystem(3, {{1, 3}}), ConceptSystem::all_pairs(4)};
  for (const auto& s : systems) {
    auto vertices = generate_vertices(s);
    auto facets = enumerate_facets(s);
    for (const auto& f : facets) {
      check_is_facet(f, vertices, s.dimension());
      const auto first = std::find_if(f.coefficients.begin(), f.coefficients.end(),
                                      [](const Rational& a) { return !a.is_zero(); });
      REQUIRE(first != f.coefficients.end());
      CHECK(first->abs() == Rational(1));
    }
    for (std::size_t i = 0; i < facets.size(); ++i) {
      for (std::size_t j = i + 1; j < facets.size(); ++j) CHECK_FALSE(facets[i] == facets[j]);
    }
  }
}

TEST_CASE("the triangle inequality appears for three concepts") {
  auto s = ConceptSystem::all_pairs(3);
  auto r = rendered(s);
  CHECK(std::find(r.begin(), r.end(), "p1 + p2 + p3 - p12 - p13 - p23 <= 1") != r.end());
}

TEST_CASE("polytope facets are cached and edges are complete for all pairs") {
  CorrelationPolytope poly(ConceptSystem::all_pairs(3));
  const auto* first = &poly.facets();
  CHECK(first == &poly.facets());
  CHECK(poly.edges().size() == 28);
  CorrelationPolytope cube(ConceptSystem(3, {}));
  CHECK(cube.edges().size() == 12);
}
