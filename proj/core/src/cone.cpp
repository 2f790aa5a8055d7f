#include "invord/cone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "invord/simplex.hpp"

namespace invord {

namespace {

bool isZero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// Incremental rational row echelon, for rank bookkeeping.
class RowBasis {
public:
  explicit RowBasis(int dim) : dim_(dim) {}

  int rank() const { return static_cast<int>(echelon_.size()); }

  // Adds v to the span if independent; reports whether the rank grew.
  bool tryAdd(RatVector v) {
    for (const auto& row : echelon_) {
      if (v[row.second] == 0) continue;
      Rational f = v[row.second] / row.first[row.second];
      for (int j = 0; j < dim_; ++j) v[j] -= f * row.first[j];
    }
    for (int j = 0; j < dim_; ++j)
      if (v[j] != 0) {
        echelon_.emplace_back(std::move(v), j);
        return true;
      }
    return false;
  }

private:
  int dim_;
  std::vector<std::pair<RatVector, int>> echelon_; // (row, pivot column)
};

} // namespace

ConeOrder::ConeOrder(int dim, std::vector<IntVector> gens)
    : dim_(dim), gens_(std::move(gens)) {
  if (dim_ < 1)
    throw Error(ErrorKind::MalformedInput, "cone dimension must be >= 1");
  if (dim_ > limits::kConeDim)
    throw Error(ErrorKind::CapExceeded, "cone dimension " + std::to_string(dim_) +
                                            " exceeds cap " +
                                            std::to_string(limits::kConeDim));
  if (static_cast<int>(gens_.size()) > limits::kConeGens)
    throw Error(ErrorKind::CapExceeded,
                "cone has " + std::to_string(gens_.size()) + " generators, cap is " +
                    std::to_string(limits::kConeGens));
  for (const auto& g : gens_) {
    if (static_cast<int>(g.size()) != dim_)
      throw Error(ErrorKind::MalformedInput, "cone generator dimension mismatch");
    if (isZero(g))
      throw Error(ErrorKind::MalformedInput, "cone generators must be nonzero");
  }
}

namespace {

// Strict positivity as an LP: maximize eps subject to w.s >= eps for every
// generator and |w_j| <= 1, with w split into nonnegative parts. The box
// keeps the problem bounded; the optimum is positive exactly when some
// weight is strictly positive on all of S. At optimum zero the duals of the
// generator rows give the zero combination.
GordanCertificate gordanOnGens(int dim, const std::vector<IntVector>& gens) {
  if (gens.empty()) {
    RatVector w(dim, 0);
    w[0] = 1;
    return PositiveWeight{std::move(w)};
  }
  const size_t m = gens.size();
  const size_t nVars = 2 * dim + 1; // p, q, eps
  RatMatrix A;
  RatVector b;
  for (const auto& s : gens) {
    RatVector row(nVars, 0);
    for (int j = 0; j < dim; ++j) {
      row[j] = -s[j];
      row[dim + j] = s[j];
    }
    row[2 * dim] = 1;
    A.push_back(std::move(row));
    b.push_back(0);
  }
  for (int j = 0; j < dim; ++j) {
    RatVector row(nVars, 0);
    row[j] = 1;
    row[dim + j] = -1;
    A.push_back(std::move(row));
    b.push_back(1);
    RatVector row2(nVars, 0);
    row2[j] = -1;
    row2[dim + j] = 1;
    A.push_back(std::move(row2));
    b.push_back(1);
  }
  RatVector c(nVars, 0);
  c[2 * dim] = 1;

  LpSolution sol = solveBoundedMax(A, b, c);
  if (sol.value > 0) {
    RatVector w(dim);
    for (int j = 0; j < dim; ++j) w[j] = sol.x[j] - sol.x[dim + j];
    return PositiveWeight{std::move(w)};
  }

  // scale the generator-row duals to integers
  Integer lcm = 1;
  for (size_t i = 0; i < m; ++i)
    lcm = boost::multiprecision::lcm(lcm, denominator(sol.y[i]));
  std::vector<Integer> coeffs(m);
  for (size_t i = 0; i < m; ++i)
    coeffs[i] = numerator(sol.y[i]) * (lcm / denominator(sol.y[i]));
  return ZeroCombo{std::move(coeffs)};
}

} // namespace

GordanCertificate gordanCertificate(const ConeOrder& c) {
  GordanCertificate cert = gordanOnGens(c.dim(), c.gens());
  if (!verifyGordan(c, cert))
    throw std::logic_error("gordanCertificate: produced certificate fails verification");
  return cert;
}

bool verifyGordan(const ConeOrder& c, const GordanCertificate& cert) {
  if (const auto* pw = std::get_if<PositiveWeight>(&cert)) {
    if (static_cast<int>(pw->w.size()) != c.dim()) return false;
    for (const auto& s : c.gens())
      if (dot(pw->w, s) <= 0) return false;
    return true;
  }
  const auto& zc = std::get<ZeroCombo>(cert);
  if (zc.coeffs.size() != c.gens().size()) return false;
  bool nonzero = false;
  for (const auto& l : zc.coeffs) {
    if (l < 0) return false;
    if (l > 0) nonzero = true;
  }
  if (!nonzero) return false;
  for (int j = 0; j < c.dim(); ++j) {
    Integer sum = 0;
    for (size_t i = 0; i < c.gens().size(); ++i) sum += zc.coeffs[i] * c.gens()[i][j];
    if (sum != 0) return false;
  }
  return true;
}

MembershipCertificate coneMember(const ConeOrder& c, const IntVector& d) {
  if (static_cast<int>(d.size()) != c.dim())
    throw Error(ErrorKind::MalformedInput, "coneMember: vector dimension mismatch");
  const size_t m = c.gens().size();
  RatMatrix E(c.dim(), RatVector(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (int r = 0; r < c.dim(); ++r) E[r][i] = c.gens()[i][r];
  RatVector rhs(c.dim());
  for (int r = 0; r < c.dim(); ++r) rhs[r] = d[r];

  FeasSolution sol = solveEqFeasibility(E, rhs);
  MembershipCertificate cert =
      sol.feasible ? MembershipCertificate{Combo{sol.x}}
                   : MembershipCertificate{SeparatingWeight{sol.y}};
  if (!verifyMembership(c, d, cert))
    throw std::logic_error("coneMember: produced certificate fails verification");
  return cert;
}

bool verifyMembership(const ConeOrder& c, const IntVector& d,
                      const MembershipCertificate& cert) {
  if (const auto* combo = std::get_if<Combo>(&cert)) {
    if (combo->coeffs.size() != c.gens().size()) return false;
    for (const auto& q : combo->coeffs)
      if (q < 0) return false;
    for (int j = 0; j < c.dim(); ++j) {
      Rational sum = 0;
      for (size_t i = 0; i < c.gens().size(); ++i)
        sum += combo->coeffs[i] * c.gens()[i][j];
      if (sum != d[j]) return false;
    }
    return true;
  }
  const auto& sw = std::get<SeparatingWeight>(cert);
  if (static_cast<int>(sw.w.size()) != c.dim()) return false;
  for (const auto& s : c.gens())
    if (dot(sw.w, s) < 0) return false;
  return dot(sw.w, d) < 0;
}

namespace {

bool searchCombo(const ConeOrder& c, size_t i, IntVector& remaining, long long bound,
                 std::vector<long long>& coeffs,
                 std::set<std::pair<size_t, IntVector>>& failed) {
  if (i == c.gens().size()) return isZero(remaining);
  if (failed.count({i, remaining})) return false;
  const IntVector& g = c.gens()[i];
  for (long long t = 0; t <= bound; ++t) {
    if (t > 0)
      for (int j = 0; j < c.dim(); ++j) remaining[j] -= g[j];
    coeffs[i] = t;
    if (searchCombo(c, i + 1, remaining, bound, coeffs, failed)) return true;
  }
  for (int j = 0; j < c.dim(); ++j) remaining[j] += bound * g[j];
  coeffs[i] = 0;
  failed.insert({i, remaining});
  return false;
}

} // namespace

std::optional<MonoidCombo> monoidMemberBounded(const ConeOrder& c, const IntVector& d,
                                               long long bound) {
  if (static_cast<int>(d.size()) != c.dim())
    throw Error(ErrorKind::MalformedInput, "monoidMemberBounded: dimension mismatch");
  if (bound < 1)
    throw Error(ErrorKind::MalformedInput, "monoidMemberBounded: bound must be >= 1");
  // d = 0 is covered by reflexivity, not by the monoid
  if (isZero(d)) return std::nullopt;
  IntVector remaining = d;
  std::vector<long long> coeffs(c.gens().size(), 0);
  std::set<std::pair<size_t, IntVector>> failed;
  if (searchCombo(c, 0, remaining, bound, coeffs, failed))
    return MonoidCombo{std::move(coeffs)};
  return std::nullopt;
}

WeightOrder::WeightOrder(int dim, RatMatrix rows) : dim_(dim), rows_(std::move(rows)) {
  if (dim_ < 1 || rows_.empty())
    throw Error(ErrorKind::MalformedInput, "weight order needs at least one row");
  RowBasis basis(dim_);
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != dim_)
      throw Error(ErrorKind::MalformedInput, "weight row dimension mismatch");
    basis.tryAdd(row);
  }
  if (basis.rank() != dim_)
    throw Error(ErrorKind::MalformedInput, "weight matrix must have full rank");
}

Cmp weightCompare(const WeightOrder& w, const IntVector& x, const IntVector& y) {
  if (static_cast<int>(x.size()) != w.dim() || static_cast<int>(y.size()) != w.dim())
    throw Error(ErrorKind::MalformedInput, "weightCompare: dimension mismatch");
  for (const auto& row : w.rows()) {
    Rational lhs = dot(row, x);
    Rational rhs = dot(row, y);
    if (lhs < rhs) return Cmp::Less;
    if (lhs > rhs) return Cmp::Greater;
  }
  return Cmp::Equal; // full rank: all rows tie only at x = y
}

namespace {

void appendBasisCompletion(int dim, RatMatrix& rows, RowBasis& basis) {
  for (int j = 0; j < dim && basis.rank() < dim; ++j) {
    RatVector e(dim, 0);
    e[j] = 1;
    if (basis.tryAdd(e)) rows.push_back(std::move(e));
  }
}

// Rows making every vector of `gens` lexicographically positive, built
// recursively: a strictly positive Gordan weight first, then (for anything
// it ties, which a strictly positive weight never does) a descent into its
// null space with the pivot coordinate dropped.
RatMatrix positiveRows(int dim, const std::vector<IntVector>& gens) {
  if (gens.empty() || dim == 0) return {};
  GordanCertificate cert = gordanOnGens(dim, gens);
  const auto* pw = std::get_if<PositiveWeight>(&cert);
  if (!pw)
    throw std::logic_error("positiveRows: tied generators of a pointed cone "
                           "lost pointedness");
  const RatVector& v = pw->w;
  RatMatrix rows{v};

  std::vector<IntVector> tied;
  for (const auto& g : gens)
    if (dot(v, g) == 0) tied.push_back(g);
  if (tied.empty()) return rows;

  int pivot = 0;
  while (v[pivot] == 0) ++pivot;
  std::vector<IntVector> projected;
  for (const auto& g : tied) {
    IntVector p;
    for (int j = 0; j < dim; ++j)
      if (j != pivot) p.push_back(g[j]);
    projected.push_back(std::move(p));
  }
  for (const auto& sub : positiveRows(dim - 1, projected)) {
    RatVector lifted(dim, 0);
    int jj = 0;
    for (int j = 0; j < dim; ++j)
      if (j != pivot) lifted[j] = sub[jj++];
    rows.push_back(std::move(lifted));
  }
  return rows;
}

} // namespace

WeightOrder weightExtension(const ConeOrder& c) {
  GordanCertificate cert = gordanCertificate(c);
  if (const auto* zc = std::get_if<ZeroCombo>(&cert))
    throw ConeNotPointedError("weightExtension: the cone order is not antisymmetric",
                              *zc);
  RatMatrix rows{std::get<PositiveWeight>(cert).w};
  RowBasis basis(c.dim());
  basis.tryAdd(rows[0]);
  appendBasisCompletion(c.dim(), rows, basis);
  return WeightOrder(c.dim(), std::move(rows));
}

WeightOrder separatingExtension(const ConeOrder& c, const IntVector& x,
                                const IntVector& y) {
  if (static_cast<int>(x.size()) != c.dim() || static_cast<int>(y.size()) != c.dim())
    throw Error(ErrorKind::MalformedInput, "separatingExtension: dimension mismatch");
  GordanCertificate gordan = gordanCertificate(c);
  if (const auto* zc = std::get_if<ZeroCombo>(&gordan))
    throw ConeNotPointedError("separatingExtension: the cone order is not antisymmetric",
                              *zc);

  IntVector d(c.dim());
  for (int j = 0; j < c.dim(); ++j) d[j] = x[j] - y[j];
  MembershipCertificate member = coneMember(c, d);
  if (const auto* combo = std::get_if<Combo>(&member)) {
    std::ostringstream os;
    os << "separatingExtension: y <=_G x, no extension can place x strictly below y";
    throw SeparationBlockedError(os.str(), *combo);
  }
  const RatVector& w = std::get<SeparatingWeight>(member).w;

  RatMatrix rows{w};
  std::vector<IntVector> tied;
  for (const auto& s : c.gens())
    if (dot(w, s) == 0) tied.push_back(s);
  if (!tied.empty()) {
    int pivot = 0;
    while (w[pivot] == 0) ++pivot;
    std::vector<IntVector> projected;
    for (const auto& s : tied) {
      IntVector p;
      for (int j = 0; j < c.dim(); ++j)
        if (j != pivot) p.push_back(s[j]);
      projected.push_back(std::move(p));
    }
    for (const auto& sub : positiveRows(c.dim() - 1, projected)) {
      RatVector lifted(c.dim(), 0);
      int jj = 0;
      for (int j = 0; j < c.dim(); ++j)
        if (j != pivot) lifted[j] = sub[jj++];
      rows.push_back(std::move(lifted));
    }
  }

  RowBasis basis(c.dim());
  for (const auto& row : rows) basis.tryAdd(row);
  appendBasisCompletion(c.dim(), rows, basis);
  return WeightOrder(c.dim(), std::move(rows));
}

} // namespace invord
