#pragma once

#include "ttour/rational.hpp"

#include <cstddef>
#include <vector>

namespace ttour {

/// Exact primal simplex for
///
///     maximize  obj·y   subject to  A y ≤ b,  y ≥ 0,   with b ≥ 0,
///
/// so the all-slack basis is feasible and no phase one is needed. Columns can
/// be appended between solves (column generation); the current basis is kept
/// and the new column is priced against it.
///
/// Pivoting uses Bland's rule: the entering variable is the lowest-id one with
/// positive reduced cost, the leaving row is the minimum ratio with ties broken
/// toward the lowest basic variable id. Slack i has id i, structural column j
/// has id rows()+j.
class RationalSimplex {
public:
  enum class Status { kOptimal, kUnbounded };

  explicit RationalSimplex(std::vector<Rational> rhs);

  std::size_t rows() const { return rhs_.size(); }
  std::size_t columns() const { return objective_.size(); }

  /// Appends a structural column; returns its column index.
  std::size_t add_column(const Rational& objective, const std::vector<Rational>& coefficients);

  Status solve();

  const Rational& objective_value() const { return value_; }
  /// Value of structural column j at the current basis.
  Rational primal(std::size_t column) const;
  std::vector<Rational> primal() const;
  /// Row prices π = c_B B⁻¹ (nonnegative at optimality).
  std::vector<Rational> duals() const;
  std::size_t pivots() const { return pivots_; }

private:
  void pivot(std::size_t row, std::size_t var);

  std::vector<Rational> rhs_;
  std::vector<Rational> objective_;
  // Row-major tableau over all variables: slacks first, then structurals.
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  std::vector<std::ptrdiff_t> row_of_var_;
  Rational value_ = 0;
  std::size_t pivots_ = 0;
};

} // namespace ttour
