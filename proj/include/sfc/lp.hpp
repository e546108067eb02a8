/*
  Small dense linear programs solved exactly over the rationals.

  Two-phase tableau simplex with Bland's rule: the entering column is the
  lowest-index improving column and ties in the ratio test go to the lowest
  basic variable index, so the method terminates and is deterministic for a
  given input order. No tolerances anywhere.
*/
#pragma once

#include "sfc/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sfc {

enum class Relation { less_equal, equal, greater_equal };

struct Term {
  std::size_t var = 0;
  Rational coef{0};
};

struct LinearConstraint {
  std::vector<Term> terms;
  Relation relation = Relation::less_equal;
  Rational rhs{0};
};

// maximize objective . x subject to the constraints and lower <= x <= upper.
class LinearProgram {
 public:
  LinearProgram() = default;

  std::size_t add_variable(Rational lower = 0, std::optional<Rational> upper = std::nullopt,
                           Rational objective = 0);
  void set_objective(std::size_t var, Rational coef);
  void set_bounds(std::size_t var, Rational lower, std::optional<Rational> upper);
  void add_constraint(std::vector<Term> terms, Relation relation, Rational rhs);

  std::size_t variable_count() const { return objective_.size(); }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<Rational>& lower() const { return lower_; }
  const std::vector<std::optional<Rational>>& upper() const { return upper_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

 private:
  std::vector<Rational> objective_;
  std::vector<Rational> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<LinearConstraint> constraints_;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value{0};
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

LpSolution solve(const LinearProgram& lp);

// Phase one only; returns a point satisfying every constraint and bound.
std::optional<std::vector<Rational>> feasible(const LinearProgram& lp);

// Exact membership test for x in the feasible region.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace sfc
