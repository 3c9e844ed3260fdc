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

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corrpoly/error.hpp"
#include "corrpoly/lp.hpp"
#include "corrpoly/rational.hpp"

namespace corrpoly {

using lp::Vector;

/// Size caps for the exponential parts of the machinery.
struct Limits {
  /// Largest concept count accepted for vertex generation and the
  /// membership programs (2^n columns).
  unsigned max_concepts = 16;
  /// Largest concept count accepted for facet enumeration.
  unsigned max_facet_concepts = 4;
};

/// A measured conjunction (i, j), 1-based with i < j.
struct IndexPair {
  unsigned first = 0;
  unsigned second = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// n concepts plus the ordered set S of pairs whose conjunctions were
/// measured. Coordinates of the ambient space are p_1..p_n followed by one
/// p_ij per pair, in the order given.
class ConceptSystem {
 public:
  /// Throws DimensionError for n == 0, out-of-range or unordered pairs,
  /// and duplicates.
  ConceptSystem(unsigned concept_count, std::vector<IndexPair> pairs);

  /// Two concepts and their conjunction: n = 2, S = {(1,2)}.
  static ConceptSystem two_concepts();
  /// All n(n-1)/2 pairs in lexicographic order.
  static ConceptSystem all_pairs(unsigned concept_count);

  unsigned concept_count() const { return concept_count_; }
  const std::vector<IndexPair>& pairs() const { return pairs_; }
  std::size_t dimension() const { return concept_count_ + pairs_.size(); }
  bool is_two_concepts() const;

  /// "p1", "p12"; indices are separated by '_' once any exceeds 9.
  std::string coordinate_name(std::size_t k) const;

  friend bool operator==(const ConceptSystem&, const ConceptSystem&) = default;

 private:
  unsigned concept_count_;
  std::vector<IndexPair> pairs_;
};

/// Measured weights (p_1..p_n, ..., p_ij, ...).
struct CorrelationVector {
  Vector singles;  // p_i = mu(A_i)
  Vector joints;   // p_ij = mu(A_i and A_j), ordered as ConceptSystem::pairs()

  static CorrelationVector of_pair(Rational p1, Rational p2, Rational p12);
  /// Splits a flat coordinate vector according to the system.
  static CorrelationVector from_coordinates(const ConceptSystem& system, const Vector& coords);

  Vector coordinates() const;
  /// Throws DimensionError unless the shape matches the system.
  void check_shape(const ConceptSystem& system) const;

  friend bool operator==(const CorrelationVector&, const CorrelationVector&) = default;
};

/// Bit i-1 of an Epsilon mask holds epsilon_i.
using Epsilon = std::uint32_t;

inline bool epsilon_bit(Epsilon eps, unsigned concept_index) {
  return ((eps >> (concept_index - 1)) & 1U) != 0;
}

/// u^eps: u_i = eps_i, u_ij = eps_i * eps_j.
struct Vertex {
  Epsilon epsilon = 0;
  Vector coords;
};

/// Weights lambda_eps over the 2^n vertices, indexed by Epsilon mask.
struct ConvexDecomposition {
  unsigned concept_count = 0;
  Vector weights;

  const Rational& weight(Epsilon eps) const { return weights.at(eps); }
  /// lambda >= 0 everywhere and sum lambda == 1.
  bool is_valid() const;
};

/// The measure space (Omega, power set of Omega, P) with Omega = {0,1}^n,
/// P(X) = sum of point masses over X, and events E_i = {eps : eps_i = 1}.
class FiniteMeasureSpace {
 public:
  FiniteMeasureSpace(unsigned concept_count, Vector point_mass);

  unsigned concept_count() const { return concept_count_; }
  std::size_t sample_point_count() const { return point_mass_.size(); }
  const Vector& point_masses() const { return point_mass_; }

  /// P(X) for X given by its sample points; duplicates count once.
  Rational measure(std::span<const Epsilon> points) const;
  std::vector<Epsilon> event(unsigned concept_index) const;
  Rational event_measure(unsigned concept_index) const;
  Rational joint_measure(unsigned i, unsigned j) const;

  /// P(empty) = 0, nonnegative masses, P(Omega) = 1, and additivity over
  /// the partition into atoms.
  bool satisfies_axioms() const;

 private:
  unsigned concept_count_;
  Vector point_mass_;
};

/// a . x <= b
struct Inequality {
  Vector coefficients;
  Rational bound;

  /// b - a . x; negative means violated.
  Rational slack(const Vector& x) const;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// A valid inequality of the polytope that the tested point violates.
struct SeparatingInequality {
  Inequality inequality;
  Rational violation;  // a . p - b > 0
};

enum class Region { Inside, Outside };

struct MembershipVerdict {
  Region status = Region::Outside;
  /// Unset when the facets of the system are beyond the facet cap.
  std::optional<bool> on_boundary;
  std::optional<ConvexDecomposition> decomposition;
  /// A violated facet of the polytope when facets are available, otherwise
  /// the certificate inequality itself.
  std::optional<SeparatingInequality> witness;
  /// The inequality read directly off the Farkas multipliers, scaled so its
  /// largest coefficient magnitude is one.
  std::optional<SeparatingInequality> certificate_inequality;

  bool inside() const { return status == Region::Inside; }
};

enum class FacetState { Strict, Tight, Violated };

struct FacetStatus {
  Inequality facet;
  Rational slack;
  FacetState state = FacetState::Strict;
};

/// The four boundary inequalities of c(2,{(1,2)}) evaluated at one point.
struct FacetCheck {
  std::array<FacetStatus, 4> facets;

  bool inside() const;
  std::size_t tight_count() const;
  std::size_t violated_count() const;
};

/// Thrown by decompose() on points outside the polytope.
class OutsidePolytopeError : public DomainError {
 public:
  OutsidePolytopeError(const std::string& what, SeparatingInequality witness)
      : DomainError(what), witness_(std::move(witness)) {}
  const SeparatingInequality& witness() const { return witness_; }

 private:
  SeparatingInequality witness_;
};

/// The classical correlation polytope c(n, S) of one concept system.
/// Vertices are built eagerly; facets on first request. Instances are
/// immutable from the caller's view and safe to share between threads.
class CorrelationPolytope {
 public:
  /// Throws SizeCapError when n exceeds limits.max_concepts.
  explicit CorrelationPolytope(ConceptSystem system, Limits limits = {});
  ~CorrelationPolytope();
  CorrelationPolytope(CorrelationPolytope&&) noexcept;
  CorrelationPolytope& operator=(CorrelationPolytope&&) noexcept;

  const ConceptSystem& system() const { return system_; }
  const Limits& limits() const { return limits_; }
  std::size_t dimension() const { return system_.dimension(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  bool facets_available() const { return system_.concept_count() <= limits_.max_facet_concepts; }
  /// Throws SizeCapError when n exceeds limits.max_facet_concepts.
  const std::vector<Inequality>& facets() const;
  /// Vertex index pairs spanning one-dimensional faces.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  MembershipVerdict membership(const CorrelationVector& p) const;
  ConvexDecomposition decompose(const CorrelationVector& p) const;
  Rational violation_magnitude(const CorrelationVector& p) const;

  /// sum_eps lambda_eps u^eps
  Vector recombine(const ConvexDecomposition& decomposition) const;
  /// a . u <= b on every vertex and a . p > b, by exhaustive check.
  bool separates(const Inequality& inequality, const CorrelationVector& p) const;

 private:
  struct FacetCache;

  lp::LinearProgram membership_program(const Vector& coords) const;
  SeparatingInequality sharpen(const SeparatingInequality& certificate, const Vector& p) const;
  std::optional<bool> boundary_flag(const CorrelationVector& p) const;

  ConceptSystem system_;
  Limits limits_;
  std::vector<Vertex> vertices_;
  std::unique_ptr<FacetCache> facet_cache_;
};

std::vector<Vertex> generate_vertices(const ConceptSystem& system, const Limits& limits = {});
MembershipVerdict membership(const CorrelationVector& p, const ConceptSystem& system);
ConvexDecomposition decompose(const CorrelationVector& p, const ConceptSystem& system);
FiniteMeasureSpace build_measure_space(const ConvexDecomposition& decomposition,
                                       const ConceptSystem& system);
/// Exact equality of P(E_i) with p_i and of P(E_i and E_j) with p_ij.
bool verify_measure_reproduces(const FiniteMeasureSpace& space, const CorrelationVector& p,
                               const ConceptSystem& system);
/// Normalized so that the first nonzero coefficient has magnitude one.
std::vector<Inequality> enumerate_facets(const ConceptSystem& system, const Limits& limits = {});
FacetCheck facet_check_n2(const CorrelationVector& p);
Rational violation_magnitude(const CorrelationVector& p, const ConceptSystem& system);
/// max(p12 - p1, p12 - p2, 0) for a two-concept vector.
Rational overextension_degree(const CorrelationVector& p);

/// The correlation vector induced by a measure space.
CorrelationVector induced_correlation(const FiniteMeasureSpace& space, const ConceptSystem& system);

/// "p1 + p2 - p12 <= 1"
std::string render_inequality(const Inequality& inequality, const ConceptSystem& system);

}  // namespace corrpoly
