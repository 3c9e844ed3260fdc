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

#include "corrpoly/polytope.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>

#include "facet_enumeration.hpp"
#include "linalg.hpp"

namespace corrpoly {

// ---------------------------------------------------------------------------
// ConceptSystem

ConceptSystem::ConceptSystem(unsigned concept_count, std::vector<IndexPair> pairs)
    : concept_count_(concept_count), pairs_(std::move(pairs)) {
  if (concept_count_ == 0) throw DimensionError("a concept system needs at least one concept");
  std::set<IndexPair> seen;
  for (const auto& p : pairs_) {
    if (p.first < 1 || p.first >= p.second || p.second > concept_count_) {
      throw DimensionError("invalid pair (" + std::to_string(p.first) + "," +
                           std::to_string(p.second) + ") for n = " +
                           std::to_string(concept_count_));
    }
    if (!seen.insert(p).second) {
      throw DimensionError("duplicate pair (" + std::to_string(p.first) + "," +
                           std::to_string(p.second) + ")");
    }
  }
}

ConceptSystem ConceptSystem::two_concepts() { return ConceptSystem(2, {{1, 2}}); }

ConceptSystem ConceptSystem::all_pairs(unsigned concept_count) {
  std::vector<IndexPair> pairs;
  for (unsigned i = 1; i <= concept_count; ++i) {
    for (unsigned j = i + 1; j <= concept_count; ++j) pairs.push_back({i, j});
  }
  return ConceptSystem(concept_count, std::move(pairs));
}

bool ConceptSystem::is_two_concepts() const {
  return concept_count_ == 2 && pairs_.size() == 1 && pairs_[0] == IndexPair{1, 2};
}

std::string ConceptSystem::coordinate_name(std::size_t k) const {
  if (k < concept_count_) return "p" + std::to_string(k + 1);
  const IndexPair& p = pairs_.at(k - concept_count_);
  const char* sep = concept_count_ > 9 ? "_" : "";
  return "p" + std::to_string(p.first) + sep + std::to_string(p.second);
}

// ---------------------------------------------------------------------------
// CorrelationVector

CorrelationVector CorrelationVector::of_pair(Rational p1, Rational p2, Rational p12) {
  return CorrelationVector{{std::move(p1), std::move(p2)}, {std::move(p12)}};
}

CorrelationVector CorrelationVector::from_coordinates(const ConceptSystem& system,
                                                      const Vector& coords) {
  if (coords.size() != system.dimension()) {
    throw DimensionError("expected " + std::to_string(system.dimension()) + " coordinates, got " +
                         std::to_string(coords.size()));
  }
  CorrelationVector p;
  p.singles.assign(coords.begin(), coords.begin() + system.concept_count());
  p.joints.assign(coords.begin() + system.concept_count(), coords.end());
  return p;
}

Vector CorrelationVector::coordinates() const {
  Vector out = singles;
  out.insert(out.end(), joints.begin(), joints.end());
  return out;
}

void CorrelationVector::check_shape(const ConceptSystem& system) const {
  if (singles.size() != system.concept_count() || joints.size() != system.pairs().size()) {
    throw DimensionError("correlation vector has shape (" + std::to_string(singles.size()) + "," +
                         std::to_string(joints.size()) + "), system expects (" +
                         std::to_string(system.concept_count()) + "," +
                         std::to_string(system.pairs().size()) + ")");
  }
}

// ---------------------------------------------------------------------------
// Decompositions and measure spaces

bool ConvexDecomposition::is_valid() const {
  if (weights.size() != (std::size_t{1} << concept_count)) return false;
  Rational total;
  for (const auto& w : weights) {
    if (w.sign() < 0) return false;
    total += w;
  }
  return total == Rational(1);
}

FiniteMeasureSpace::FiniteMeasureSpace(unsigned concept_count, Vector point_mass)
    : concept_count_(concept_count), point_mass_(std::move(point_mass)) {
  if (point_mass_.size() != (std::size_t{1} << concept_count_)) {
    throw DimensionError("measure space over {0,1}^" + std::to_string(concept_count_) +
                         " needs " + std::to_string(std::size_t{1} << concept_count_) +
                         " point masses");
  }
}

Rational FiniteMeasureSpace::measure(std::span<const Epsilon> points) const {
  std::set<Epsilon> distinct(points.begin(), points.end());
  Rational total;
  for (Epsilon e : distinct) total += point_mass_.at(e);
  return total;
}

std::vector<Epsilon> FiniteMeasureSpace::event(unsigned concept_index) const {
  std::vector<Epsilon> out;
  for (Epsilon e = 0; e < point_mass_.size(); ++e) {
    if (epsilon_bit(e, concept_index)) out.push_back(e);
  }
  return out;
}

Rational FiniteMeasureSpace::event_measure(unsigned concept_index) const {
  return measure(event(concept_index));
}

Rational FiniteMeasureSpace::joint_measure(unsigned i, unsigned j) const {
  std::vector<Epsilon> both;
  for (Epsilon e = 0; e < point_mass_.size(); ++e) {
    if (epsilon_bit(e, i) && epsilon_bit(e, j)) both.push_back(e);
  }
  return measure(both);
}

bool FiniteMeasureSpace::satisfies_axioms() const {
  if (!measure({}).is_zero()) return false;
  Rational total;
  for (const auto& m : point_mass_) {
    if (m.sign() < 0) return false;
    total += m;
  }
  std::vector<Epsilon> omega(point_mass_.size());
  for (Epsilon e = 0; e < omega.size(); ++e) omega[e] = e;
  return measure(omega) == Rational(1) && total == Rational(1);
}

// ---------------------------------------------------------------------------
// Inequalities

Rational Inequality::slack(const Vector& x) const {
  if (x.size() != coefficients.size()) {
    throw DimensionError("inequality of dimension " + std::to_string(coefficients.size()) +
                         " evaluated at a point of dimension " + std::to_string(x.size()));
  }
  Rational s = bound;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!coefficients[k].is_zero()) s -= coefficients[k] * x[k];
  }
  return s;
}

bool FacetCheck::inside() const { return violated_count() == 0; }

std::size_t FacetCheck::tight_count() const {
  return static_cast<std::size_t>(std::count_if(facets.begin(), facets.end(), [](const auto& f) {
    return f.state == FacetState::Tight;
  }));
}

std::size_t FacetCheck::violated_count() const {
  return static_cast<std::size_t>(std::count_if(facets.begin(), facets.end(), [](const auto& f) {
    return f.state == FacetState::Violated;
  }));
}

std::string render_inequality(const Inequality& inequality, const ConceptSystem& system) {
  // Positive terms first, then negative ones, each group in coordinate order.
  std::string lhs;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < inequality.coefficients.size(); ++k) {
      const Rational& c = inequality.coefficients[k];
      if (c.is_zero() || (c.sign() > 0) != (pass == 0)) continue;
      if (lhs.empty()) {
        if (c.sign() < 0) lhs += "-";
      } else {
        lhs += c.sign() < 0 ? " - " : " + ";
      }
      if (c.abs() != Rational(1)) lhs += c.abs().to_string() + " ";
      lhs += system.coordinate_name(k);
    }
  }
  if (lhs.empty()) lhs = "0";
  return lhs + " <= " + inequality.bound.to_string();
}

// ---------------------------------------------------------------------------
// CorrelationPolytope

namespace {

void require_within(unsigned n, unsigned cap, const char* what) {
  if (n > cap) {
    throw SizeCapError(std::string(what) + " is limited to n <= " + std::to_string(cap) +
                       ", got n = " + std::to_string(n));
  }
}

// Divides through by the largest coefficient magnitude.
SeparatingInequality normalized_witness(Vector a, Rational b, const Vector& p) {
  Rational scale;
  for (const auto& c : a) scale = std::max(scale, c.abs());
  for (auto& c : a) c /= scale;
  b /= scale;
  Inequality ineq{std::move(a), std::move(b)};
  Rational violation = -ineq.slack(p);
  return SeparatingInequality{std::move(ineq), std::move(violation)};
}

}  // namespace

struct CorrelationPolytope::FacetCache {
  std::once_flag once;
  std::vector<Inequality> facets;
};

CorrelationPolytope::CorrelationPolytope(ConceptSystem system, Limits limits)
    : system_(std::move(system)),
      limits_(limits),
      vertices_(generate_vertices(system_, limits_)),
      facet_cache_(std::make_unique<FacetCache>()) {}

CorrelationPolytope::~CorrelationPolytope() = default;
CorrelationPolytope::CorrelationPolytope(CorrelationPolytope&&) noexcept = default;
CorrelationPolytope& CorrelationPolytope::operator=(CorrelationPolytope&&) noexcept = default;

const std::vector<Inequality>& CorrelationPolytope::facets() const {
  require_within(system_.concept_count(), limits_.max_facet_concepts, "facet enumeration");
  std::call_once(facet_cache_->once, [this] {
    facet_cache_->facets = detail::enumerate_hull_facets(vertices_, dimension());
  });
  return facet_cache_->facets;
}

std::vector<std::pair<std::size_t, std::size_t>> CorrelationPolytope::edges() const {
  const auto& fs = facets();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertices_.size(); ++u) {
    for (std::size_t v = u + 1; v < vertices_.size(); ++v) {
      lp::Matrix normals;
      for (const auto& f : fs) {
        if (f.slack(vertices_[u].coords).is_zero() && f.slack(vertices_[v].coords).is_zero()) {
          normals.push_back(f.coefficients);
        }
      }
      if (dimension() >= 1 && linalg::rank(std::move(normals)) + 1 == dimension()) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

lp::LinearProgram CorrelationPolytope::membership_program(const Vector& coords) const {
  // Rows: one per coordinate, then sum(lambda) = 1. Columns: lambda_eps.
  const std::size_t d = dimension();
  lp::LinearProgram prog;
  prog.variable_count = vertices_.size();
  prog.nonneg_vars = vertices_.size();
  prog.rows.assign(d + 1, Vector(vertices_.size()));
  for (std::size_t e = 0; e < vertices_.size(); ++e) {
    for (std::size_t k = 0; k < d; ++k) prog.rows[k][e] = vertices_[e].coords[k];
    prog.rows[d][e] = Rational(1);
  }
  prog.rhs = coords;
  prog.rhs.emplace_back(1);
  return prog;
}

std::optional<bool> CorrelationPolytope::boundary_flag(const CorrelationVector& p) const {
  if (system_.is_two_concepts()) return facet_check_n2(p).tight_count() > 0;
  if (!facets_available()) return std::nullopt;
  const Vector x = p.coordinates();
  return std::any_of(facets().begin(), facets().end(),
                     [&](const Inequality& f) { return f.slack(x).is_zero(); });
}

MembershipVerdict CorrelationPolytope::membership(const CorrelationVector& p) const {
  p.check_shape(system_);
  const Vector x = p.coordinates();
  lp::LpOutcome outcome = lp::solve_feasibility(membership_program(x));

  MembershipVerdict verdict;
  if (outcome.status == lp::LpStatus::Feasible) {
    verdict.status = Region::Inside;
    verdict.decomposition = ConvexDecomposition{system_.concept_count(), std::move(*outcome.solution)};
    verdict.on_boundary = boundary_flag(p);
    return verdict;
  }

  // y.(u^eps, 1) <= 0 for all eps and y.(p, 1) > 0, so with a = y_coords
  // and b = -y_last: a.u <= b on every vertex, a.p > b.
  const Vector& y = outcome.certificate->row_multipliers;
  Vector a(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(dimension()));
  verdict.status = Region::Outside;
  verdict.certificate_inequality = normalized_witness(std::move(a), -y.back(), x);
  verdict.witness = facets_available() ? sharpen(*verdict.certificate_inequality, x)
                                       : *verdict.certificate_inequality;
  if (!separates(verdict.certificate_inequality->inequality, p) ||
      !separates(verdict.witness->inequality, p)) {
    throw InternalError("separating inequality failed exhaustive verification");
  }
  return verdict;
}

SeparatingInequality CorrelationPolytope::sharpen(const SeparatingInequality& certificate,
                                                  const Vector& p) const {
  // A valid inequality a.x <= b of a full-dimensional polytope splits as
  //   a = sum mu_f a_f,  sum mu_f b_f <= b,  mu >= 0
  // over the facets, and a.p > b forces some facet in the support of mu to
  // be violated at p. Columns: mu_f, then the slack of the bound row.
  const auto& fs = facets();
  const std::size_t d = dimension();
  lp::LinearProgram prog;
  prog.variable_count = fs.size() + 1;
  prog.nonneg_vars = prog.variable_count;
  prog.rows.assign(d + 1, Vector(prog.variable_count));
  for (std::size_t f = 0; f < fs.size(); ++f) {
    for (std::size_t k = 0; k < d; ++k) prog.rows[k][f] = fs[f].coefficients[k];
    prog.rows[d][f] = fs[f].bound;
  }
  prog.rows[d][fs.size()] = Rational(1);
  prog.rhs = certificate.inequality.coefficients;
  prog.rhs.push_back(certificate.inequality.bound);

  lp::LpOutcome outcome = lp::solve_feasibility(prog);
  if (outcome.status != lp::LpStatus::Feasible) {
    throw InternalError("certificate inequality is not generated by the facets");
  }
  std::optional<std::size_t> best;
  Rational best_violation;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if ((*outcome.solution)[f].sign() <= 0) continue;
    Rational violation = -fs[f].slack(p);
    if (violation.sign() > 0 && (!best || violation > best_violation)) {
      best = f;
      best_violation = std::move(violation);
    }
  }
  if (!best) throw InternalError("no violated facet in the certificate's support");
  return normalized_witness(fs[*best].coefficients, fs[*best].bound, p);
}

ConvexDecomposition CorrelationPolytope::decompose(const CorrelationVector& p) const {
  MembershipVerdict verdict = membership(p);
  if (!verdict.inside()) {
    throw OutsidePolytopeError(
        "point lies outside the correlation polytope; violated: " +
            render_inequality(verdict.witness->inequality, system_),
        *verdict.witness);
  }
  return std::move(*verdict.decomposition);
}

Rational CorrelationPolytope::violation_magnitude(const CorrelationVector& p) const {
  p.check_shape(system_);
  const Vector x = p.coordinates();
  const std::size_t d = dimension();
  const std::size_t nv = vertices_.size();
  // Columns: lambda (nv), t, s_up (d), s_down (d); all nonnegative.
  //   q_k - t + s_up_k   = p_k     (q_k - p_k <= t)
  //   q_k + t - s_down_k = p_k     (p_k - q_k <= t)
  //   sum lambda         = 1
  const std::size_t t_col = nv;
  const std::size_t cols = nv + 1 + 2 * d;
  lp::LinearProgram prog;
  prog.variable_count = cols;
  prog.nonneg_vars = cols;
  prog.rows.assign(2 * d + 1, Vector(cols));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t e = 0; e < nv; ++e) {
      prog.rows[k][e] = vertices_[e].coords[k];
      prog.rows[d + k][e] = vertices_[e].coords[k];
    }
    prog.rows[k][t_col] = Rational(-1);
    prog.rows[k][nv + 1 + k] = Rational(1);
    prog.rows[d + k][t_col] = Rational(1);
    prog.rows[d + k][nv + 1 + d + k] = Rational(-1);
    prog.rhs.push_back(x[k]);
  }
  for (std::size_t k = 0; k < d; ++k) prog.rhs.push_back(x[k]);
  for (std::size_t e = 0; e < nv; ++e) prog.rows[2 * d][e] = Rational(1);
  prog.rhs.emplace_back(1);
  Vector objective(cols);
  objective[t_col] = Rational(1);
  prog.objective = std::move(objective);

  lp::LpOutcome outcome = lp::minimize(prog);
  if (outcome.status != lp::LpStatus::Feasible) {
    throw InternalError("distance program is always feasible and bounded");
  }
  return *outcome.objective_value;
}

Vector CorrelationPolytope::recombine(const ConvexDecomposition& decomposition) const {
  if (decomposition.weights.size() != vertices_.size()) {
    throw DimensionError("decomposition has " + std::to_string(decomposition.weights.size()) +
                         " weights, polytope has " + std::to_string(vertices_.size()) +
                         " vertices");
  }
  Vector out(dimension());
  for (std::size_t e = 0; e < vertices_.size(); ++e) {
    const Rational& w = decomposition.weights[e];
    if (w.is_zero()) continue;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (!vertices_[e].coords[k].is_zero()) out[k] += w * vertices_[e].coords[k];
    }
  }
  return out;
}

bool CorrelationPolytope::separates(const Inequality& inequality,
                                    const CorrelationVector& p) const {
  if (inequality.coefficients.size() != dimension()) return false;
  for (const auto& v : vertices_) {
    if (inequality.slack(v.coords).sign() < 0) return false;
  }
  return inequality.slack(p.coordinates()).sign() < 0;
}

// ---------------------------------------------------------------------------
// Free functions

std::vector<Vertex> generate_vertices(const ConceptSystem& system, const Limits& limits) {
  const unsigned n = system.concept_count();
  require_within(n, limits.max_concepts, "vertex generation");
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << n);
  for (Epsilon eps = 0; eps < (Epsilon{1} << n); ++eps) {
    Vertex v{eps, Vector(system.dimension())};
    for (unsigned i = 1; i <= n; ++i) {
      if (epsilon_bit(eps, i)) v.coords[i - 1] = Rational(1);
    }
    for (std::size_t k = 0; k < system.pairs().size(); ++k) {
      const auto& pr = system.pairs()[k];
      if (epsilon_bit(eps, pr.first) && epsilon_bit(eps, pr.second)) v.coords[n + k] = Rational(1);
    }
    out.push_back(std::move(v));
  }
  return out;
}

MembershipVerdict membership(const CorrelationVector& p, const ConceptSystem& system) {
  return CorrelationPolytope(system).membership(p);
}

ConvexDecomposition decompose(const CorrelationVector& p, const ConceptSystem& system) {
  return CorrelationPolytope(system).decompose(p);
}

FiniteMeasureSpace build_measure_space(const ConvexDecomposition& decomposition,
                                       const ConceptSystem& system) {
  if (decomposition.concept_count != system.concept_count()) {
    throw DimensionError("decomposition is over n = " + std::to_string(decomposition.concept_count) +
                         ", system has n = " + std::to_string(system.concept_count()));
  }
  if (!decomposition.is_valid()) {
    throw DomainError("decomposition weights must be nonnegative and sum to one");
  }
  return FiniteMeasureSpace(decomposition.concept_count, decomposition.weights);
}

CorrelationVector induced_correlation(const FiniteMeasureSpace& space, const ConceptSystem& system) {
  if (space.concept_count() != system.concept_count()) {
    throw DimensionError("measure space and system disagree on n");
  }
  CorrelationVector p;
  for (unsigned i = 1; i <= system.concept_count(); ++i) p.singles.push_back(space.event_measure(i));
  for (const auto& pr : system.pairs()) p.joints.push_back(space.joint_measure(pr.first, pr.second));
  return p;
}

bool verify_measure_reproduces(const FiniteMeasureSpace& space, const CorrelationVector& p,
                               const ConceptSystem& system) {
  if (space.concept_count() != system.concept_count()) return false;
  if (p.singles.size() != system.concept_count() || p.joints.size() != system.pairs().size()) {
    return false;
  }
  return induced_correlation(space, system) == p;
}

std::vector<Inequality> enumerate_facets(const ConceptSystem& system, const Limits& limits) {
  require_within(system.concept_count(), limits.max_facet_concepts, "facet enumeration");
  return detail::enumerate_hull_facets(generate_vertices(system, limits), system.dimension());
}

FacetCheck facet_check_n2(const CorrelationVector& p) {
  p.check_shape(ConceptSystem::two_concepts());
  const Rational one(1);
  const Rational zero;
  // -p12 <= 0; p12 - p1 <= 0; p12 - p2 <= 0; p1 + p2 - p12 <= 1
  const std::array<Inequality, 4> ineqs{{
      {{zero, zero, -one}, zero},
      {{-one, zero, one}, zero},
      {{zero, -one, one}, zero},
      {{one, one, -one}, one},
  }};
  const Vector x = p.coordinates();
  FacetCheck check;
  for (std::size_t f = 0; f < ineqs.size(); ++f) {
    Rational s = ineqs[f].slack(x);
    FacetState state = s.sign() > 0 ? FacetState::Strict
                       : s.is_zero() ? FacetState::Tight
                                     : FacetState::Violated;
    check.facets[f] = FacetStatus{ineqs[f], std::move(s), state};
  }
  return check;
}

Rational violation_magnitude(const CorrelationVector& p, const ConceptSystem& system) {
  return CorrelationPolytope(system).violation_magnitude(p);
}

Rational overextension_degree(const CorrelationVector& p) {
  p.check_shape(ConceptSystem::two_concepts());
  const Rational& p12 = p.joints[0];
  return std::max({p12 - p.singles[0], p12 - p.singles[1], Rational()});
}

}  // namespace corrpoly
