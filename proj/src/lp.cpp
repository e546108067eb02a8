#include "sfc/lp.hpp"

#include <stdexcept>

namespace sfc {

std::size_t LinearProgram::add_variable(Rational lower, std::optional<Rational> upper,
                                        Rational objective) {
  objective_.push_back(std::move(objective));
  lower_.push_back(std::move(lower));
  upper_.push_back(std::move(upper));
  return objective_.size() - 1;
}

void LinearProgram::set_objective(std::size_t var, Rational coef) {
  objective_.at(var) = std::move(coef);
}

void LinearProgram::set_bounds(std::size_t var, Rational lower, std::optional<Rational> upper) {
  lower_.at(var) = std::move(lower);
  upper_.at(var) = std::move(upper);
}

void LinearProgram::add_constraint(std::vector<Term> terms, Relation relation, Rational rhs) {
  for (const auto& t : terms) {
    if (t.var >= objective_.size()) throw std::out_of_range("constraint references unknown variable");
  }
  constraints_.push_back({std::move(terms), relation, std::move(rhs)});
}

namespace {

using Row = std::vector<Rational>;

// Standard form: rows . y (=) rhs >= 0, y >= 0, with a starting basis of
// slack or artificial columns.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : structural_(lp.variable_count()) {
    struct RawRow {
      Row coefs;
      Relation relation;
      Rational rhs;
    };
    std::vector<RawRow> raw;
    // Shift x = lower + y.
    for (const auto& c : lp.constraints()) {
      RawRow r{Row(structural_), c.relation, c.rhs};
      for (const auto& t : c.terms) {
        r.coefs[t.var] += t.coef;
        r.rhs -= t.coef * lp.lower()[t.var];
      }
      raw.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < structural_; ++j) {
      if (!lp.upper()[j]) continue;
      RawRow r{Row(structural_), Relation::less_equal, *lp.upper()[j] - lp.lower()[j]};
      r.coefs[j] = 1;
      raw.push_back(std::move(r));
    }
    for (auto& r : raw) {
      if (r.rhs < 0) {
        for (auto& a : r.coefs) a = -a;
        r.rhs = -r.rhs;
        if (r.relation == Relation::less_equal) {
          r.relation = Relation::greater_equal;
        } else if (r.relation == Relation::greater_equal) {
          r.relation = Relation::less_equal;
        }
      }
    }
    std::size_t slacks = 0, artificials = 0;
    for (const auto& r : raw) {
      if (r.relation != Relation::equal) ++slacks;
      if (r.relation != Relation::less_equal) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    columns_ = first_artificial_ + artificials;
    rows_.reserve(raw.size());
    basis_.reserve(raw.size());
    std::size_t next_slack = structural_, next_art = first_artificial_;
    for (auto& r : raw) {
      Row row(columns_ + 1);
      for (std::size_t j = 0; j < structural_; ++j) row[j] = r.coefs[j];
      row[columns_] = r.rhs;
      if (r.relation == Relation::less_equal) {
        row[next_slack] = 1;
        basis_.push_back(next_slack++);
      } else {
        if (r.relation == Relation::greater_equal) row[next_slack++] = -1;
        row[next_art] = 1;
        basis_.push_back(next_art++);
      }
      rows_.push_back(std::move(row));
    }
  }

  // Maximize cost . y over columns below `limit`. Returns false if unbounded.
  bool optimize(const Row& cost, std::size_t limit) {
    price(cost);
    while (true) {
      std::size_t enter = columns_;
      for (std::size_t j = 0; j < limit; ++j) {
        if (z_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == columns_) return true;
      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][columns_] / a;
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  // Removes artificial columns from the basis after a successful phase one.
  void evict_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == first_artificial_) {
        // Redundant equality.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

  Rational objective_value() const { return z_[columns_]; }
  std::size_t columns() const { return columns_; }
  std::size_t first_artificial() const { return first_artificial_; }
  std::size_t pivots() const { return pivots_; }

  std::vector<Rational> structural_values() const {
    std::vector<Rational> y(structural_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < structural_) y[basis_[i]] = rows_[i][columns_];
    }
    return y;
  }

 private:
  void price(const Row& cost) {
    z_.assign(columns_ + 1, Rational(0));
    for (std::size_t j = 0; j < columns_; ++j) z_[j] = -cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (rows_[i][j] != 0) z_[j] += cb * rows_[i][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    Row& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= columns_; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nonzero.push_back(j);
      }
    }
    auto eliminate = [&](Row& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (std::size_t j : nonzero) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    if (!z_.empty()) eliminate(z_);
    basis_[r] = c;
  }

  std::size_t structural_;
  std::size_t first_artificial_ = 0;
  std::size_t columns_ = 0;
  std::vector<Row> rows_;
  std::vector<std::size_t> basis_;
  Row z_;
  std::size_t pivots_ = 0;
};

bool bounds_consistent(const LinearProgram& lp) {
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    if (lp.upper()[j] && *lp.upper()[j] < lp.lower()[j]) return false;
  }
  return true;
}

// Phase one; true when a feasible basis (without artificials) was reached.
bool phase_one(Tableau& t) {
  Row cost(t.columns(), Rational(0));
  for (std::size_t j = t.first_artificial(); j < t.columns(); ++j) cost[j] = -1;
  t.optimize(cost, t.columns());
  if (t.objective_value() != 0) return false;
  t.evict_artificials();
  return true;
}

std::vector<Rational> unshift(const LinearProgram& lp, std::vector<Rational> y) {
  for (std::size_t j = 0; j < y.size(); ++j) y[j] += lp.lower()[j];
  return y;
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  LpSolution out;
  if (!bounds_consistent(lp)) return out;
  Tableau t(lp);
  if (!phase_one(t)) {
    out.pivots = t.pivots();
    return out;
  }
  Row cost(t.columns(), Rational(0));
  for (std::size_t j = 0; j < lp.variable_count(); ++j) cost[j] = lp.objective()[j];
  bool bounded = t.optimize(cost, t.first_artificial());
  out.pivots = t.pivots();
  if (!bounded) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.x = unshift(lp, t.structural_values());
  out.value = 0;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) out.value += lp.objective()[j] * out.x[j];
  return out;
}

std::optional<std::vector<Rational>> feasible(const LinearProgram& lp) {
  if (!bounds_consistent(lp)) return std::nullopt;
  Tableau t(lp);
  if (!phase_one(t)) return std::nullopt;
  return unshift(lp, t.structural_values());
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variable_count()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < lp.lower()[j]) return false;
    if (lp.upper()[j] && x[j] > *lp.upper()[j]) return false;
  }
  for (const auto& c : lp.constraints()) {
    Rational lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * x[t.var];
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace sfc
