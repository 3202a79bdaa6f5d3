#include "ttour/simplex.hpp"

#include <stdexcept>

namespace ttour {

RationalSimplex::RationalSimplex(std::vector<Rational> rhs) : rhs_(std::move(rhs)) {
  const std::size_t m = rhs_.size();
  for (const Rational& b : rhs_) {
    if (b < 0) {
      throw std::invalid_argument("RationalSimplex: right-hand side must be nonnegative");
    }
  }
  tableau_.assign(m, std::vector<Rational>(m, 0));
  basis_.resize(m);
  row_of_var_.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    tableau_[r][r] = 1;
    basis_[r] = r;
    row_of_var_[r] = static_cast<std::ptrdiff_t>(r);
  }
  reduced_.assign(m, 0);
}

std::size_t RationalSimplex::add_column(const Rational& objective,
                                        const std::vector<Rational>& coefficients) {
  const std::size_t m = rows();
  if (coefficients.size() != m) {
    throw std::invalid_argument("RationalSimplex: column has wrong length");
  }
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < m; ++i) {
    if (coefficients[i] != 0) {
      nonzero.push_back(i);
    }
  }
  // Entries are B⁻¹a, and B⁻¹ sits in the slack block of the tableau.
  for (std::size_t r = 0; r < m; ++r) {
    Rational entry = 0;
    for (const std::size_t i : nonzero) {
      if (tableau_[r][i] != 0) {
        entry += tableau_[r][i] * coefficients[i];
      }
    }
    tableau_[r].push_back(std::move(entry));
  }
  Rational reduced = objective;
  for (const std::size_t i : nonzero) {
    reduced += reduced_[i] * coefficients[i];
  }
  reduced_.push_back(std::move(reduced));
  objective_.push_back(objective);
  row_of_var_.push_back(-1);
  return objective_.size() - 1;
}

RationalSimplex::Status RationalSimplex::solve() {
  const std::size_t m = rows();
  while (true) {
    std::size_t entering = reduced_.size();
    for (std::size_t var = 0; var < reduced_.size(); ++var) {
      if (reduced_[var] > 0) {
        entering = var;
        break;
      }
    }
    if (entering == reduced_.size()) {
      return Status::kOptimal;
    }

    std::size_t leaving = m;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      const Rational& a = tableau_[r][entering];
      if (a <= 0) {
        continue;
      }
      Rational ratio = rhs_[r] / a;
      if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == m) {
      return Status::kUnbounded;
    }
    pivot(leaving, entering);
  }
}

void RationalSimplex::pivot(std::size_t row, std::size_t var) {
  std::vector<Rational>& pivot_row = tableau_[row];
  const Rational pivot_value = pivot_row[var];
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < pivot_row.size(); ++j) {
    if (pivot_row[j] != 0) {
      pivot_row[j] /= pivot_value;
      nonzero.push_back(j);
    }
  }
  rhs_[row] /= pivot_value;

  for (std::size_t r = 0; r < tableau_.size(); ++r) {
    if (r == row || tableau_[r][var] == 0) {
      continue;
    }
    const Rational factor = tableau_[r][var];
    for (const std::size_t j : nonzero) {
      tableau_[r][j] -= factor * pivot_row[j];
    }
    rhs_[r] -= factor * rhs_[row];
  }
  if (reduced_[var] != 0) {
    const Rational factor = reduced_[var];
    for (const std::size_t j : nonzero) {
      reduced_[j] -= factor * pivot_row[j];
    }
    value_ += factor * rhs_[row];
  }

  row_of_var_[basis_[row]] = -1;
  basis_[row] = var;
  row_of_var_[var] = static_cast<std::ptrdiff_t>(row);
  ++pivots_;
}

Rational RationalSimplex::primal(std::size_t column) const {
  const std::ptrdiff_t r = row_of_var_.at(rows() + column);
  return r < 0 ? Rational(0) : rhs_[static_cast<std::size_t>(r)];
}

std::vector<Rational> RationalSimplex::primal() const {
  std::vector<Rational> out;
  out.reserve(columns());
  for (std::size_t j = 0; j < columns(); ++j) {
    out.push_back(primal(j));
  }
  return out;
}

std::vector<Rational> RationalSimplex::duals() const {
  std::vector<Rational> out;
  out.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    out.push_back(-reduced_[i]);
  }
  return out;
}

} // namespace ttour
