#include "invord/simplex.hpp"

#include <stdexcept>

namespace invord {

namespace {

// Dense rational tableau for `max c.x` over equality rows with a starting
// basis. Bland's rule (smallest eligible column, smallest basic variable on
// ties) rules out cycling, which is what matters at this scale.
class Tableau {
public:
  Tableau(RatMatrix rows, RatVector rhs, RatVector cost, std::vector<int> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), cost_(std::move(cost)),
        basis_(std::move(basis)), reduced_(cost_), value_(0) {
    // express the objective in terms of the non-basic variables
    for (size_t i = 0; i < basis_.size(); ++i) priceOut(i);
  }

  void solve() {
    for (;;) {
      int enter = -1;
      for (size_t j = 0; j < reduced_.size(); ++j)
        if (reduced_[j] > 0) {
          enter = static_cast<int>(j);
          break;
        }
      if (enter < 0) return; // optimal

      int leave = -1;
      Rational best = 0;
      for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) throw std::logic_error("simplex: unbounded objective");
      pivot(leave, enter);
    }
  }

  const Rational& value() const { return value_; }

  RatVector primal(size_t nVars) const {
    RatVector x(nVars, 0);
    for (size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < static_cast<int>(nVars)) x[basis_[i]] = rhs_[i];
    return x;
  }

  // c_B B^{-1} through the columns `firstCol..firstCol+m-1`, which must have
  // held an identity in the starting tableau.
  RatVector duals(size_t firstCol) const {
    RatVector y(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i)
      y[i] = cost_[firstCol + i] - reduced_[firstCol + i];
    return y;
  }

private:
  void priceOut(size_t row) {
    const Rational cb = cost_[basis_[row]];
    if (cb == 0) return;
    for (size_t j = 0; j < reduced_.size(); ++j) reduced_[j] -= cb * rows_[row][j];
    value_ += cb * rhs_[row];
  }

  void pivot(int leave, int enter) {
    Rational p = rows_[leave][enter];
    for (auto& v : rows_[leave]) v /= p;
    rhs_[leave] /= p;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == leave) continue;
      Rational f = rows_[i][enter];
      if (f == 0) continue;
      for (size_t j = 0; j < rows_[i].size(); ++j)
        rows_[i][j] -= f * rows_[leave][j];
      rhs_[i] -= f * rhs_[leave];
    }
    Rational f = reduced_[enter];
    if (f != 0) {
      for (size_t j = 0; j < reduced_.size(); ++j)
        reduced_[j] -= f * rows_[leave][j];
      value_ += f * rhs_[leave];
    }
    basis_[leave] = enter;
  }

  RatMatrix rows_;
  RatVector rhs_;
  RatVector cost_;
  std::vector<int> basis_;
  RatVector reduced_;
  Rational value_;
};

} // namespace

LpSolution solveBoundedMax(const RatMatrix& A, const RatVector& b, const RatVector& c) {
  const size_t m = A.size();
  const size_t n = c.size();
  RatMatrix rows(m, RatVector(n + m, 0));
  RatVector cost(n + m, 0);
  std::vector<int> basis(m);
  for (size_t i = 0; i < m; ++i) {
    if (b[i] < 0) throw std::logic_error("solveBoundedMax: needs b >= 0");
    for (size_t j = 0; j < n; ++j) rows[i][j] = A[i][j];
    rows[i][n + i] = 1; // slack
    basis[i] = static_cast<int>(n + i);
  }
  for (size_t j = 0; j < n; ++j) cost[j] = c[j];

  Tableau t(std::move(rows), b, std::move(cost), std::move(basis));
  t.solve();
  return LpSolution{t.value(), t.primal(n), t.duals(n)};
}

FeasSolution solveEqFeasibility(const RatMatrix& E, const RatVector& d) {
  const size_t m = E.size();
  size_t n = 0;
  for (const auto& row : E) n = std::max(n, row.size());

  std::vector<int> sign(m, 1);
  RatMatrix rows(m, RatVector(n + m, 0));
  RatVector rhs(m);
  RatVector cost(n + m, 0);
  std::vector<int> basis(m);
  for (size_t i = 0; i < m; ++i) {
    sign[i] = d[i] < 0 ? -1 : 1;
    for (size_t j = 0; j < E[i].size(); ++j) rows[i][j] = sign[i] * E[i][j];
    rhs[i] = sign[i] * d[i];
    rows[i][n + i] = 1; // artificial
    cost[n + i] = -1;
    basis[i] = static_cast<int>(n + i);
  }

  Tableau t(std::move(rows), std::move(rhs), std::move(cost), std::move(basis));
  t.solve();

  FeasSolution out;
  out.feasible = t.value() == 0;
  if (out.feasible) {
    out.x = t.primal(n);
  } else {
    RatVector y = t.duals(n); // duals of the sign-flipped system
    out.y.resize(m);
    for (size_t i = 0; i < m; ++i) out.y[i] = sign[i] * y[i];
  }
  return out;
}

} // namespace invord
