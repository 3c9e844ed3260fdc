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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corrpoly/dataset.hpp"
#include "corrpoly/polytope.hpp"
#include "corrpoly/report.hpp"
#include "test_support.hpp"

using namespace corrpoly;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Points gathered by the reproduction and oracle criteria for the
// round-trip check.
std::vector<CorrelationVector> g_seen_points;

const CorrelationPolytope& two() {
  static const CorrelationPolytope poly(ConceptSystem::two_concepts());
  return poly;
}

// "Phone Box" and "Phone box", "Log Cabin" and "LogCabin" name the same item.
std::string name_key(const std::string& name) {
  std::string key;
  for (char c : name) {
    if (c != ' ') key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return key;
}

Outcome bundled_reproduction() {
  const auto start = Clock::now();
  const auto report = classify(bundled_hampton_dataset());
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = report.summary.mismatches.empty() && report.summary.total == 96 &&
           report.summary.outside_count == 75 && report.summary.inside_count == 21 &&
           elapsed < 1.0;
  for (const auto& e : report.entries) {
    if (!e.matched_expected || !*e.matched_expected) o.pass = false;
    g_seen_points.push_back(e.item.correlation());
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu items, %zu outside, %zu inside, %zu mismatches, %.3f s",
                report.summary.total, report.summary.outside_count, report.summary.inside_count,
                report.summary.mismatches.size(), elapsed);
  o.detail = buf;
  return o;
}

Outcome classical_item_lists() {
  struct Group {
    std::vector<std::string> pairs;
    std::vector<std::string> classical;
  };
  const std::vector<Group> groups{
      {{"furniture_household", "building_dwelling"},
       {"Castle", "Cave", "Phone Box", "Synagogue", "Log Cabin", "House"}},
      {{"food_plant", "machine_vehicle"},
       {"Steak", "Backpack", "Automobile", "Bus", "Sailboat", "Raft"}},
      {{"weapon_tool", "bird_pet"},
       {"Knife", "Toothbrush", "Elephant", "Dog", "Cat", "Goldfish", "Parakeet", "Parrot",
        "Canary"}},
  };
  const auto& ds = bundled_hampton_dataset();
  Outcome o;
  std::size_t checked = 0;
  for (const auto& g : groups) {
    std::set<std::string> expected;
    for (const auto& n : g.classical) expected.insert(name_key(n));
    std::set<std::string> found;
    for (const auto& pair : g.pairs) {
      for (const auto& e : classify(ds, pair).entries) {
        if (e.verdict.inside()) found.insert(name_key(e.item.item_name));
      }
    }
    if (found != expected) {
      o.pass = false;
      o.detail += "group " + g.pairs[0] + " differs; ";
    }
    checked += expected.size();
  }
  if (o.pass) o.detail = "3 groups, " + std::to_string(checked) + " classical items, exact match";
  return o;
}

// Scales so that the largest coefficient magnitude is one; positive scaling
// only, so the direction of the inequality is kept.
Inequality scaled(const Inequality& f) {
  Rational m;
  for (const auto& a : f.coefficients) m = std::max(m, a.abs());
  Inequality out = f;
  for (auto& a : out.coefficients) a = a / m;
  out.bound = out.bound / m;
  return out;
}

Outcome facet_recovery() {
  // mu(A1 and A2) >= 0; mu(A1 and A2) <= mu(A1); mu(A1 and A2) <= mu(A2);
  // mu(A1) + mu(A2) - mu(A1 and A2) <= 1, as a.x <= b over (p1, p2, p12).
  const std::vector<Inequality> expected{
      {{Rational(0), Rational(0), Rational(-1)}, Rational(0)},
      {{Rational(-1), Rational(0), Rational(1)}, Rational(0)},
      {{Rational(0), Rational(-1), Rational(1)}, Rational(0)},
      {{Rational(1), Rational(1), Rational(-1)}, Rational(1)}};
  const std::vector<Vector> expected_vertices{{Rational(0), Rational(0), Rational(0)},
                                              {Rational(1), Rational(0), Rational(0)},
                                              {Rational(0), Rational(1), Rational(0)},
                                              {Rational(1), Rational(1), Rational(1)}};
  const auto system = ConceptSystem::two_concepts();
  const auto facets = enumerate_facets(system);
  std::set<std::vector<std::string>> got;
  std::set<std::vector<std::string>> want;
  auto key = [](const Inequality& f) {
    std::vector<std::string> k;
    for (const auto& a : scaled(f).coefficients) k.push_back(a.to_string());
    k.push_back(scaled(f).bound.to_string());
    return k;
  };
  for (const auto& f : facets) got.insert(key(f));
  for (const auto& f : expected) want.insert(key(f));
  std::set<Vector> vert_got;
  for (const auto& v : generate_vertices(system)) vert_got.insert(v.coords);
  std::set<Vector> vert_want(expected_vertices.begin(), expected_vertices.end());
  Outcome o;
  o.pass = facets.size() == 4 && got == want && vert_got == vert_want;
  o.detail = std::to_string(facets.size()) + " facets, " + std::to_string(vert_got.size()) +
             " vertices";
  return o;
}

Outcome oracle_equivalence() {
  testing::Rng rng(20240601);
  const long denominators[] = {4, 20, 10000};
  const int count = 12000;
  const auto start = Clock::now();
  int agree = 0;
  int inside = 0;
  for (int k = 0; k < count; ++k) {
    const long den = denominators[k % 3];
    auto p = CorrelationVector::of_pair(rng.unit(den), rng.unit(den), rng.unit(den));
    const bool lp = two().membership(p).inside();
    const bool direct = facet_check_n2(p).inside();
    agree += lp == direct ? 1 : 0;
    inside += lp ? 1 : 0;
    g_seen_points.push_back(p);
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = agree == count && elapsed < 30.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d agree (%d inside), %.2f s", agree, count, inside, elapsed);
  o.detail = buf;
  return o;
}

Outcome measure_round_trip() {
  const auto system = ConceptSystem::two_concepts();
  std::size_t inside = 0;
  std::size_t outside = 0;
  std::size_t failures = 0;
  for (const auto& p : g_seen_points) {
    const auto v = two().membership(p);
    if (v.inside()) {
      ++inside;
      const auto space = build_measure_space(*v.decomposition, system);
      if (!space.satisfies_axioms() || !verify_measure_reproduces(space, p, system)) ++failures;
    } else {
      ++outside;
      if (!v.witness || !v.certificate_inequality ||
          !two().separates(v.witness->inequality, p) ||
          !two().separates(v.certificate_inequality->inequality, p)) {
        ++failures;
      }
    }
  }
  Outcome o;
  o.pass = failures == 0 && !g_seen_points.empty();
  o.detail = std::to_string(inside) + " inside reproduced, " + std::to_string(outside) +
             " outside witnesses verified, " + std::to_string(failures) + " failures";
  return o;
}

Outcome three_concepts() {
  const CorrelationPolytope poly(ConceptSystem::all_pairs(3));
  testing::Rng rng(3);
  std::size_t inside_ok = 0;
  std::size_t outside_ok = 0;
  for (int k = 0; k < 1000; ++k) {
    ConvexDecomposition d{3, testing::random_convex_weights(rng, 8, 1000)};
    const auto p = CorrelationVector::from_coordinates(poly.system(), poly.recombine(d));
    if (poly.membership(p).inside()) ++inside_ok;
  }
  for (int k = 0; k < 1000; ++k) {
    ConvexDecomposition d{3, testing::random_convex_weights(rng, 8, 1000)};
    auto p = CorrelationVector::from_coordinates(poly.system(), poly.recombine(d));
    const std::size_t j = static_cast<std::size_t>(rng.below(3));
    const auto& pr = poly.system().pairs()[j];
    const Rational bump(rng.between(1, 1000), 10000);
    p.joints[j] = std::min(p.singles[pr.first - 1], p.singles[pr.second - 1]) + bump;
    const auto v = poly.membership(p);
    if (!v.inside() && v.witness && poly.separates(v.witness->inequality, p) &&
        poly.separates(v.certificate_inequality->inequality, p)) {
      ++outside_ok;
    }
  }
  Outcome o;
  o.pass = inside_ok == 1000 && outside_ok == 1000;
  o.detail = std::to_string(inside_ok) + "/1000 combinations inside, " +
             std::to_string(outside_ok) + "/1000 bumped points outside with valid witnesses";
  return o;
}

Outcome overextension_linkage() {
  std::size_t overextended = 0;
  std::size_t exceptions = 0;
  for (const auto& item : bundled_hampton_dataset().items) {
    const auto p = item.correlation();
    if (overextension_degree(p).sign() > 0) {
      ++overextended;
      if (two().membership(p).inside()) ++exceptions;
    }
  }
  Outcome o;
  o.pass = exceptions == 0;
  o.detail = std::to_string(overextended) + " overextended items, " + std::to_string(exceptions) +
             " classified inside";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"bundled dataset reproduction", bundled_reproduction},
      {"classical item lists per pair group", classical_item_lists},
      {"two-concept facets and vertices", facet_recovery},
      {"LP versus four-inequality oracle", oracle_equivalence},
      {"measure-space round trip and witnesses", measure_round_trip},
      {"three-concept sanity", three_concepts},
      {"overextension implies outside", overextension_linkage},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %-40s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
