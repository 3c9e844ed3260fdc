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

#include "corrpoly/lp.hpp"

#include <limits>
#include <string>
#include <utility>

#include "corrpoly/error.hpp"

namespace corrpoly::lp {

void LinearProgram::validate() const {
  if (rhs.size() != rows.size()) {
    throw DimensionError("linear program has " + std::to_string(rows.size()) + " rows but " +
                         std::to_string(rhs.size()) + " right-hand sides");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != variable_count) {
      throw DimensionError("row " + std::to_string(i) + " has length " +
                           std::to_string(rows[i].size()) + ", expected " +
                           std::to_string(variable_count));
    }
  }
  if (nonneg_vars > variable_count) {
    throw DimensionError("nonneg_vars exceeds variable count");
  }
  if (objective && objective->size() != variable_count) {
    throw DimensionError("objective length " + std::to_string(objective->size()) +
                         " does not match variable count " + std::to_string(variable_count));
  }
}

bool satisfies(const LinearProgram& lp, const Vector& x) {
  if (x.size() != lp.variable_count) return false;
  for (std::size_t j = 0; j < lp.nonneg_vars; ++j) {
    if (x[j].sign() < 0) return false;
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    Rational lhs;
    for (std::size_t j = 0; j < lp.variable_count; ++j) {
      if (!lp.rows[i][j].is_zero()) lhs += lp.rows[i][j] * x[j];
    }
    if (lhs != lp.rhs[i]) return false;
  }
  return true;
}

bool certifies_infeasible(const LinearProgram& lp, const FarkasCertificate& cert) {
  const Vector& y = cert.row_multipliers;
  if (y.size() != lp.rows.size()) return false;
  for (std::size_t j = 0; j < lp.variable_count; ++j) {
    Rational col;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (!y[i].is_zero()) col += y[i] * lp.rows[i][j];
    }
    if (j < lp.nonneg_vars ? col.sign() > 0 : !col.is_zero()) return false;
  }
  Rational yb;
  for (std::size_t i = 0; i < y.size(); ++i) yb += y[i] * lp.rhs[i];
  return yb.sign() > 0;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau over exact rationals. Every free variable of the
// input is split into a pair of nonnegative columns; one artificial column
// per row provides the starting basis. All pivot choices follow Bland's
// rule, lowest index first, so runs are reproducible and cycle free.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp)
      : original_vars_(lp.variable_count),
        nonneg_(lp.nonneg_vars),
        structural_(lp.variable_count + (lp.variable_count - lp.nonneg_vars)),
        rows_(lp.rows.size()),
        row_sign_(lp.rows.size(), 1) {
    const std::size_t width = structural_ + rows_;
    cells_.assign(rows_, Vector(width));
    rhs_.resize(rows_);
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (lp.rhs[i].sign() < 0) row_sign_[i] = -1;
      for (std::size_t j = 0; j < original_vars_; ++j) {
        if (lp.rows[i][j].is_zero()) continue;
        Rational v = row_sign_[i] < 0 ? -lp.rows[i][j] : lp.rows[i][j];
        if (j >= nonneg_) cells_[i][negative_part(j)] = -v;
        cells_[i][j] = std::move(v);
      }
      rhs_[i] = row_sign_[i] < 0 ? -lp.rhs[i] : lp.rhs[i];
      cells_[i][structural_ + i] = Rational(1);
      basis_[i] = structural_ + i;
    }
    active_row_.assign(rows_, true);
  }

  // Minimizes the sum of artificials. Returns the optimal phase-one value.
  Rational run_phase_one() {
    if (!optimize(phase_one_cost(), structural_ + rows_)) throw InternalError("phase one reported unbounded");
    Rational value;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= structural_) value += rhs_[i];
    }
    return value;
  }

  // Farkas multipliers for the original rows, valid after a phase one that
  // ended with a positive value.
  FarkasCertificate certificate() const {
    // With cost 1 on artificial column i the reduced cost is 1 - w_i, where
    // w is the dual of the sign-normalized rows.
    FarkasCertificate cert;
    cert.row_multipliers.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational w(1);
      w -= reduced_cost(phase_one_cost(), structural_ + i);
      cert.row_multipliers[i] = row_sign_[i] < 0 ? -w : w;
    }
    return cert;
  }

  // Pivots zero-valued artificials out of the basis; rows where that is
  // impossible are linearly dependent and get dropped.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!active_row_[i] || basis_[i] < structural_) continue;
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (!cells_[i][j].is_zero()) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) {
        active_row_[i] = false;
      } else {
        pivot(i, entering);
      }
    }
  }

  // Phase two over the structural columns only. Returns false when the
  // objective is unbounded below.
  bool run_phase_two(const Vector& objective) {
    Vector cost(structural_ + rows_);
    for (std::size_t j = 0; j < original_vars_; ++j) {
      cost[j] = objective[j];
      if (j >= nonneg_) cost[negative_part(j)] = -objective[j];
    }
    return optimize(cost, structural_);
  }

  Vector solution() const {
    Vector split(structural_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (active_row_[i] && basis_[i] < structural_) split[basis_[i]] = rhs_[i];
    }
    Vector x(original_vars_);
    for (std::size_t j = 0; j < original_vars_; ++j) {
      x[j] = split[j];
      if (j >= nonneg_) x[j] -= split[negative_part(j)];
    }
    return x;
  }

 private:
  std::size_t negative_part(std::size_t j) const { return original_vars_ + (j - nonneg_); }

  Vector phase_one_cost() const {
    Vector cost(structural_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) cost[structural_ + i] = Rational(1);
    return cost;
  }

  Rational reduced_cost(const Vector& cost, std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!active_row_[i] || cells_[i][j].is_zero() || cost[basis_[i]].is_zero()) continue;
      r -= cost[basis_[i]] * cells_[i][j];
    }
    return r;
  }

  // Bland's rule over columns [0, column_limit).
  bool optimize(const Vector& cost, std::size_t column_limit) {
    for (;;) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < column_limit; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost(cost, j).sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) return true;

      std::size_t leaving = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!active_row_[i] || cells_[i][entering].sign() <= 0) continue;
        Rational ratio = rhs_[i] / cells_[i][entering];
        if (leaving == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == kNone) return false;
      pivot(leaving, entering);
    }
  }

  bool is_basic(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (active_row_[i] && basis_[i] == j) return true;
    }
    return false;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational pivot_value = cells_[row][col];
    Vector& prow = cells_[row];
    for (auto& v : prow) {
      if (!v.is_zero()) v /= pivot_value;
    }
    rhs_[row] /= pivot_value;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || !active_row_[i] || cells_[i][col].is_zero()) continue;
      const Rational factor = cells_[i][col];
      for (std::size_t j = 0; j < prow.size(); ++j) {
        if (!prow[j].is_zero()) cells_[i][j] -= factor * prow[j];
      }
      rhs_[i] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  std::size_t original_vars_;
  std::size_t nonneg_;
  std::size_t structural_;
  std::size_t rows_;
  std::vector<int> row_sign_;
  Matrix cells_;
  Vector rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_row_;
};

void check_outcome(const LinearProgram& lp, const LpOutcome& out) {
#ifdef CORRPOLY_CHECKED_SOLVES
  if (out.solution && !satisfies(lp, *out.solution)) {
    throw InternalError("simplex solution failed exact re-verification");
  }
  if (out.certificate && !certifies_infeasible(lp, *out.certificate)) {
    throw InternalError("Farkas certificate failed exact re-verification");
  }
#else
  (void)lp;
  (void)out;
#endif
}

LpOutcome run(const LinearProgram& lp, bool optimize_objective) {
  lp.validate();
  Tableau tableau(lp);
  LpOutcome out;
  if (tableau.run_phase_one().sign() > 0) {
    out.status = LpStatus::Infeasible;
    out.certificate = tableau.certificate();
    check_outcome(lp, out);
    return out;
  }
  tableau.expel_artificials();
  if (optimize_objective) {
    if (!tableau.run_phase_two(*lp.objective)) {
      out.status = LpStatus::Unbounded;
      out.solution = tableau.solution();
      check_outcome(lp, out);
      return out;
    }
  }
  out.status = LpStatus::Feasible;
  out.solution = tableau.solution();
  if (optimize_objective) {
    Rational value;
    for (std::size_t j = 0; j < lp.variable_count; ++j) value += (*lp.objective)[j] * (*out.solution)[j];
    out.objective_value = std::move(value);
  }
  check_outcome(lp, out);
  return out;
}

}  // namespace

LpOutcome solve_feasibility(const LinearProgram& lp) { return run(lp, false); }

LpOutcome minimize(const LinearProgram& lp) {
  if (!lp.objective) throw DimensionError("minimize requires an objective");
  return run(lp, true);
}

}  // namespace corrpoly::lp
