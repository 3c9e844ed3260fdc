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

#include "corrpoly/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "corrpoly/error.hpp"

namespace corrpoly {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSignificantDigits = 6;

std::string dec(const Rational& r) { return r.to_decimal(kSignificantDigits); }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string verdict_word(const MembershipVerdict& v) { return v.inside() ? "inside" : "outside"; }

std::string boundary_word(const MembershipVerdict& v) {
  if (!v.inside()) return "-";
  if (!v.on_boundary) return "unknown";
  return *v.on_boundary ? "yes" : "no";
}

std::string state_word(FacetState s) {
  switch (s) {
    case FacetState::Strict:
      return "strict";
    case FacetState::Tight:
      return "tight";
    case FacetState::Violated:
      return "violated";
  }
  return "?";
}

Json epsilon_json(Epsilon eps, unsigned n) {
  Json bits = Json::array();
  for (unsigned i = 1; i <= n; ++i) bits.push_back(epsilon_bit(eps, i) ? 1 : 0);
  return bits;
}

std::string epsilon_text(Epsilon eps, unsigned n) {
  std::string s = "(";
  for (unsigned i = 1; i <= n; ++i) {
    if (i > 1) s += ",";
    s += epsilon_bit(eps, i) ? "1" : "0";
  }
  return s + ")";
}

Json exact_array(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json approx_array(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

Json inequality_json(const Inequality& f, const ConceptSystem& system) {
  return Json{{"coefficients", exact_array(f.coefficients)},
              {"bound", f.bound.to_string()},
              {"text", render_inequality(f, system)}};
}

Json separating_json(const SeparatingInequality& s, const ConceptSystem& system) {
  Json j = inequality_json(s.inequality, system);
  j["violation"] = s.violation.to_string();
  return j;
}

Json facet_check_json(const FacetCheck& check) {
  const auto system = ConceptSystem::two_concepts();
  Json out = Json::array();
  for (const auto& f : check.facets) {
    Json j = inequality_json(f.facet, system);
    j["slack"] = f.slack.to_string();
    j["state"] = state_word(f.state);
    out.push_back(std::move(j));
  }
  return out;
}

Json violated_facets_json(const FacetCheck& check) {
  Json out = Json::array();
  for (const auto& f : check.facets) {
    if (f.state == FacetState::Violated) {
      out.push_back(render_inequality(f.facet, ConceptSystem::two_concepts()));
    }
  }
  return out;
}

Json decomposition_json(const ConvexDecomposition& d) {
  Json out = Json::array();
  for (Epsilon e = 0; e < d.weights.size(); ++e) {
    out.push_back(Json{{"epsilon", epsilon_json(e, d.concept_count)},
                       {"lambda", d.weights[e].to_string()}});
  }
  return out;
}

Json measure_space_json(const FiniteMeasureSpace& space, const ConceptSystem& system) {
  const unsigned n = space.concept_count();
  Json points = Json::array();
  for (Epsilon e = 0; e < space.sample_point_count(); ++e) {
    points.push_back(Json{{"epsilon", epsilon_json(e, n)},
                          {"mass", space.point_masses()[e].to_string()}});
  }
  Json events = Json::array();
  for (unsigned i = 1; i <= n; ++i) {
    Json members = Json::array();
    for (Epsilon e : space.event(i)) members.push_back(epsilon_json(e, n));
    events.push_back(Json{{"name", "E" + std::to_string(i)},
                          {"points", std::move(members)},
                          {"measure", space.event_measure(i).to_string()}});
  }
  Json joints = Json::array();
  for (const auto& pr : system.pairs()) {
    joints.push_back(Json{{"events", {pr.first, pr.second}},
                          {"measure", space.joint_measure(pr.first, pr.second).to_string()}});
  }
  return Json{{"sample_points", std::move(points)},
              {"sigma_algebra", "power set"},
              {"events", std::move(events)},
              {"intersections", std::move(joints)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ItemClassification classify_item(const CorrelationPolytope& poly, const ItemRecord& item) {
  const CorrelationVector p = item.correlation();
  ItemClassification out{item, poly.membership(p), facet_check_n2(p), overextension_degree(p),
                         Rational(), std::nullopt};
  if (!out.verdict.inside()) out.violation_magnitude = poly.violation_magnitude(p);
  if (item.expected_label) {
    const bool expected_inside = *item.expected_label == ExpectedLabel::Classical;
    out.matched_expected = expected_inside == out.verdict.inside();
  }
  return out;
}

}  // namespace

std::string render_membership_inequality(const Inequality& inequality) {
  static const char* const names[] = {"mu(A1)", "mu(A2)", "mu(A1 and A2)"};
  if (inequality.coefficients.size() != 3) {
    throw DimensionError("membership notation needs a two-concept inequality");
  }
  auto side = [&](int sign) {
    std::string out;
    for (std::size_t k = 0; k < 3; ++k) {
      const Rational& c = inequality.coefficients[k];
      if (c.sign() != sign) continue;
      if (!out.empty()) out += " + ";
      if (c.abs() != Rational(1)) out += c.abs().to_string() + " ";
      out += names[k];
    }
    return out;
  };
  std::string lhs = side(1);
  std::string rhs = side(-1);
  if (inequality.bound.is_zero()) {
    return (lhs.empty() ? "0" : lhs) + " <= " + (rhs.empty() ? "0" : rhs);
  }
  // Bounded forms read best with every term on the left.
  std::string all = lhs;
  for (std::size_t k = 0; k < 3; ++k) {
    const Rational& c = inequality.coefficients[k];
    if (c.sign() >= 0) continue;
    all += all.empty() ? "-" : " - ";
    if (c.abs() != Rational(1)) all += c.abs().to_string() + " ";
    all += names[k];
  }
  return (all.empty() ? "0" : all) + " <= " + inequality.bound.to_string();
}

ClassificationReport classify(const Dataset& dataset, std::optional<std::string_view> pair_filter,
                              unsigned max_threads) {
  if (pair_filter && dataset.find_pair(*pair_filter) == nullptr) {
    throw NotFoundError("unknown pair '" + std::string(*pair_filter) + "'");
  }
  std::vector<const ItemRecord*> selected;
  for (const auto& item : dataset.items) {
    if (!pair_filter || item.pair_id == *pair_filter) selected.push_back(&item);
  }

  const CorrelationPolytope poly(ConceptSystem::two_concepts());
  (void)poly.facets();

  std::vector<std::optional<ItemClassification>> slots(selected.size());
  unsigned workers = max_threads != 0 ? max_threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, selected.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) slots[i] = classify_item(poly, *selected[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < selected.size(); i = next++) {
            slots[i] = classify_item(poly, *selected[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ClassificationReport report;
  for (auto& slot : slots) {
    ItemClassification& entry = report.entries.emplace_back(std::move(*slot));
    ++report.summary.total;
    if (entry.verdict.inside()) {
      ++report.summary.inside_count;
    } else {
      ++report.summary.outside_count;
    }
    if (entry.matched_expected == false) {
      report.summary.mismatches.push_back({entry.item.pair_id, entry.item.item_name});
    }
  }
  return report;
}

WitnessReport witness_n2(const CorrelationVector& point) {
  const auto system = ConceptSystem::two_concepts();
  const CorrelationPolytope poly(system);
  WitnessReport out{point, poly.membership(point), facet_check_n2(point), std::nullopt,
                    overextension_degree(point), Rational()};
  if (out.verdict.inside()) {
    out.measure_space = build_measure_space(*out.verdict.decomposition, system);
  } else {
    out.violation_magnitude = poly.violation_magnitude(point);
  }
  return out;
}

std::string plot_data(const Dataset& dataset, std::string_view pair_id) {
  const ConceptPair* pair = dataset.find_pair(pair_id);
  if (pair == nullptr) throw NotFoundError("unknown pair '" + std::string(pair_id) + "'");
  const CorrelationPolytope poly(ConceptSystem::two_concepts());

  Json vertices = Json::array();
  for (const auto& v : poly.vertices()) {
    vertices.push_back(Json{{"epsilon", epsilon_json(v.epsilon, 2)},
                            {"exact", exact_array(v.coords)},
                            {"approx", approx_array(v.coords)}});
  }
  Json edges = Json::array();
  for (const auto& [u, v] : poly.edges()) edges.push_back(Json::array({u, v}));

  Json points = Json::array();
  std::size_t inside = 0;
  for (const auto& item : dataset.items_of(pair_id)) {
    const CorrelationVector p = item.correlation();
    const MembershipVerdict verdict = poly.membership(p);
    inside += verdict.inside() ? 1 : 0;
    Json pt{{"item_name", item.item_name},
            {"inside", verdict.inside()},
            {"on_boundary", verdict.inside() && verdict.on_boundary.value_or(false)},
            {"exact", exact_array(p.coordinates())},
            {"approx", approx_array(p.coordinates())}};
    if (item.expected_label) pt["expected_label"] = std::string(label_code(*item.expected_label));
    points.push_back(std::move(pt));
  }

  Json doc{{"schema", "corrpoly.plotdata/1"},
           {"pair",
            {{"pair_id", pair->pair_id},
             {"name_a1", pair->name_a1},
             {"name_a2", pair->name_a2},
             {"name_conjunction", pair->name_conjunction}}},
           {"axes", {"mu(A1)", "mu(A2)", "mu(A1 and A2)"}},
           {"vertices", std::move(vertices)},
           {"edges", std::move(edges)},
           {"points", std::move(points)},
           {"inside_count", inside},
           {"outside_count", dataset.items_of(pair_id).size() - inside}};
  return dump(doc);
}

std::string render_report(const ClassificationReport& report, OutputFormat format) {
  const auto system = ConceptSystem::two_concepts();
  if (format == OutputFormat::Structured) {
    Json items = Json::array();
    for (const auto& e : report.entries) {
      Json j{{"pair_id", e.item.pair_id},
             {"item_name", e.item.item_name},
             {"weights",
              {{"mu_a1", e.item.mu_a1.to_string()},
               {"mu_a2", e.item.mu_a2.to_string()},
               {"mu_and", e.item.mu_and.to_string()}}},
             {"verdict", verdict_word(e.verdict)},
             {"on_boundary", nullptr},
             {"overextension_degree", e.overextension_degree.to_string()},
             {"violation_magnitude", e.violation_magnitude.to_string()},
             {"witness", nullptr},
             {"violated_facets", violated_facets_json(e.facets)},
             {"expected_label", nullptr},
             {"matched_expected", nullptr}};
      if (e.verdict.inside() && e.verdict.on_boundary) j["on_boundary"] = *e.verdict.on_boundary;
      if (e.verdict.witness) j["witness"] = separating_json(*e.verdict.witness, system);
      if (e.item.expected_label) j["expected_label"] = std::string(label_code(*e.item.expected_label));
      if (e.matched_expected) j["matched_expected"] = *e.matched_expected;
      items.push_back(std::move(j));
    }
    Json mismatches = Json::array();
    for (const auto& m : report.summary.mismatches) {
      mismatches.push_back(Json{{"pair_id", m.pair_id}, {"item_name", m.item_name}});
    }
    Json doc{{"schema", "corrpoly.report/1"},
             {"items", std::move(items)},
             {"summary",
              {{"total", report.summary.total},
               {"inside_count", report.summary.inside_count},
               {"outside_count", report.summary.outside_count},
               {"mismatches", std::move(mismatches)}}}};
    return dump(doc);
  }

  std::ostringstream os;
  os << pad("pair_id", 21) << pad("item", 18) << pad("mu(A1)", 9) << pad("mu(A2)", 9)
     << pad("mu(A1&A2)", 11) << pad("verdict", 9) << pad("boundary", 10) << pad("overext", 9)
     << pad("distance", 11) << pad("witness", 20) << "expected\n";
  for (const auto& e : report.entries) {
    std::string expected = "-";
    if (e.item.expected_label) {
      expected = std::string(label_code(*e.item.expected_label)) +
                 (*e.matched_expected ? " ok" : " MISMATCH");
    }
    std::string witness =
        e.verdict.witness ? render_inequality(e.verdict.witness->inequality, system) : "-";
    os << pad(e.item.pair_id, 21) << pad(e.item.item_name, 18) << pad(dec(e.item.mu_a1), 9)
       << pad(dec(e.item.mu_a2), 9) << pad(dec(e.item.mu_and), 11)
       << pad(verdict_word(e.verdict), 9) << pad(boundary_word(e.verdict), 10)
       << pad(dec(e.overextension_degree), 9) << pad(dec(e.violation_magnitude), 11)
       << pad(witness, 20) << expected << "\n";
  }
  os << "\ntotal " << report.summary.total << ", inside " << report.summary.inside_count
     << ", outside " << report.summary.outside_count << ", mismatches "
     << report.summary.mismatches.size() << "\n";
  for (const auto& m : report.summary.mismatches) {
    os << "mismatch: " << m.pair_id << " / " << m.item_name << "\n";
  }
  return os.str();
}

std::string render_witness(const WitnessReport& r, OutputFormat format) {
  const auto system = ConceptSystem::two_concepts();
  const Vector x = r.point.coordinates();
  if (format == OutputFormat::Structured) {
    Json doc{{"schema", "corrpoly.witness/1"},
             {"point", {{"p1", x[0].to_string()}, {"p2", x[1].to_string()}, {"p12", x[2].to_string()}}},
             {"verdict", verdict_word(r.verdict)},
             {"on_boundary", nullptr},
             {"facets", facet_check_json(r.facets)},
             {"overextension_degree", r.overextension_degree.to_string()},
             {"violation_magnitude", r.violation_magnitude.to_string()}};
    if (r.verdict.inside()) {
      doc["on_boundary"] = r.verdict.on_boundary.value_or(false);
      doc["decomposition"] = decomposition_json(*r.verdict.decomposition);
      doc["measure_space"] = measure_space_json(*r.measure_space, system);
    } else {
      doc["witness"] = separating_json(*r.verdict.witness, system);
      doc["certificate_inequality"] = separating_json(*r.verdict.certificate_inequality, system);
      doc["violated_facets"] = violated_facets_json(r.facets);
    }
    return dump(doc);
  }

  std::ostringstream os;
  os << "point: p1 = " << dec(x[0]) << ", p2 = " << dec(x[1]) << ", p12 = " << dec(x[2]) << "\n";
  if (r.verdict.inside()) {
    os << "verdict: inside" << (r.verdict.on_boundary.value_or(false) ? " (on boundary)" : "")
       << "\n\nconvex decomposition:\n";
    const auto& d = *r.verdict.decomposition;
    for (Epsilon e = 0; e < d.weights.size(); ++e) {
      os << "  lambda" << epsilon_text(e, 2) << " = " << dec(d.weights[e]) << "\n";
    }
    const auto& space = *r.measure_space;
    os << "\nmeasure space: Omega = {0,1}^2, sigma-algebra = power set, P(X) = sum of lambda over X\n";
    for (unsigned i = 1; i <= 2; ++i) {
      os << "  E" << i << " = {";
      bool first = true;
      for (Epsilon e : space.event(i)) {
        os << (first ? "" : ", ") << epsilon_text(e, 2);
        first = false;
      }
      os << "}  P(E" << i << ") = " << dec(space.event_measure(i)) << "\n";
    }
    os << "  P(E1 and E2) = " << dec(space.joint_measure(1, 2)) << "\n";
  } else {
    const auto& w = *r.verdict.witness;
    os << "verdict: outside\n"
       << "violated: " << render_membership_inequality(w.inequality) << "  ("
       << render_inequality(w.inequality, system) << ")\n"
       << "amount: " << dec(w.violation) << "\n"
       << "distance to polytope (max-coordinate): " << dec(r.violation_magnitude) << "\n";
  }
  os << "overextension: " << dec(r.overextension_degree) << "\n\nfacets:\n";
  for (const auto& f : r.facets.facets) {
    os << "  " << pad(render_inequality(f.facet, system), 22) << pad(state_word(f.state), 10)
       << "slack " << dec(f.slack) << "\n";
  }
  return os.str();
}

std::string render_facets(const ConceptSystem& system, const Limits& limits, OutputFormat format) {
  const CorrelationPolytope poly(system, limits);
  const auto& facets = poly.facets();
  if (format == OutputFormat::Structured) {
    Json coords = Json::array();
    for (std::size_t k = 0; k < system.dimension(); ++k) coords.push_back(system.coordinate_name(k));
    Json pairs = Json::array();
    for (const auto& p : system.pairs()) pairs.push_back(Json::array({p.first, p.second}));
    Json vertices = Json::array();
    for (const auto& v : poly.vertices()) {
      vertices.push_back(Json{{"epsilon", epsilon_json(v.epsilon, system.concept_count())},
                              {"coords", exact_array(v.coords)}});
    }
    Json fs = Json::array();
    for (const auto& f : facets) fs.push_back(inequality_json(f, system));
    Json doc{{"schema", "corrpoly.facets/1"},
             {"n", system.concept_count()},
             {"pairs", std::move(pairs)},
             {"coordinates", std::move(coords)},
             {"vertices", std::move(vertices)},
             {"facets", std::move(fs)}};
    return dump(doc);
  }
  std::ostringstream os;
  os << "c(" << system.concept_count() << ", {";
  for (std::size_t k = 0; k < system.pairs().size(); ++k) {
    os << (k ? "," : "") << "(" << system.pairs()[k].first << "," << system.pairs()[k].second << ")";
  }
  os << "}): dimension " << system.dimension() << ", " << poly.vertices().size() << " vertices, "
     << facets.size() << " facets\n";
  for (const auto& f : facets) os << render_inequality(f, system) << "\n";
  return os.str();
}

}  // namespace corrpoly
