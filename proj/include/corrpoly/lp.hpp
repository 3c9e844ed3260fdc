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

#include <cstddef>
#include <optional>
#include <vector>

#include "corrpoly/rational.hpp"

namespace corrpoly::lp {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Equality-form program  A x = b  with x_0 .. x_{k-1} >= 0 and the
/// remaining variables free, where k = nonneg_vars. The objective, when
/// present, is minimized.
struct LinearProgram {
  Matrix rows;  // A
  Vector rhs;   // b
  std::size_t variable_count = 0;
  std::size_t nonneg_vars = 0;
  std::optional<Vector> objective;

  /// Throws DimensionError on ragged rows, mismatched rhs or objective, or
  /// nonneg_vars > variable_count.
  void validate() const;
};

/// Witness that A x = b has no solution with the sign constraints: y.A is
/// <= 0 on nonnegative columns and == 0 on free columns, while y.b > 0.
struct FarkasCertificate {
  Vector row_multipliers;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Vector> solution;
  std::optional<Rational> objective_value;  // minimize() only
  std::optional<FarkasCertificate> certificate;
};

/// Phase-one simplex. Feasible outcomes carry a basic solution, infeasible
/// outcomes a certificate read from the phase-one duals.
LpOutcome solve_feasibility(const LinearProgram& lp);

/// Two-phase simplex on lp.objective. Unbounded programs are reported as
/// LpStatus::Unbounded with a feasible point but no objective value.
LpOutcome minimize(const LinearProgram& lp);

/// Exact checks used on every solve when CORRPOLY_CHECKED_SOLVES is on.
bool satisfies(const LinearProgram& lp, const Vector& x);
bool certifies_infeasible(const LinearProgram& lp, const FarkasCertificate& cert);

}  // namespace corrpoly::lp
