#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "invord/error.hpp"
#include "invord/limits.hpp"
#include "invord/rational.hpp"

namespace invord {

using IntVector = std::vector<long long>;

// Finitely generated invariant order on Z^k: x <= y iff y - x lies in the
// monoid generated by S, or x = y. The generators are the "positive cone".
class ConeOrder {
public:
  ConeOrder(int dim, std::vector<IntVector> gens);

  int dim() const { return dim_; }
  const std::vector<IntVector>& gens() const { return gens_; }

private:
  int dim_;
  std::vector<IntVector> gens_; // nonzero, dimension dim_
};

// Gordan alternative for S: either a weight strictly positive on every
// generator, or a nonnegative integer combination of generators equal to 0.
// Exactly one exists; PositiveWeight iff the generated order is antisymmetric
// (the monoid meets its negation only in 0).
struct PositiveWeight {
  RatVector w; // w.s > 0 for all s in S
};
struct ZeroCombo {
  std::vector<Integer> coeffs; // >= 0, not all zero, sum coeffs[i]*s_i = 0
};
using GordanCertificate = std::variant<PositiveWeight, ZeroCombo>;

GordanCertificate gordanCertificate(const ConeOrder& c);

bool verifyGordan(const ConeOrder& c, const GordanCertificate& cert);

// Rational-cone membership of d, deciding x <=_G y via d = y - x: d lies in
// the rational cone of S iff some positive multiple of d lies in the monoid.
struct Combo {
  RatVector coeffs; // >= 0, sum coeffs[i]*s_i = d
};
struct SeparatingWeight {
  RatVector w; // w.s >= 0 for all s in S, w.d < 0
};
using MembershipCertificate = std::variant<Combo, SeparatingWeight>;

MembershipCertificate coneMember(const ConeOrder& c, const IntVector& d);

bool verifyMembership(const ConeOrder& c, const IntVector& d,
                      const MembershipCertificate& cert);

// Bounded search for a nonnegative integer combination with coefficients at
// most `bound` summing to d. A semi-decision for the plain order <=; by
// convention d = 0 reports not-found (equality is handled by reflexivity,
// not by the monoid).
struct MonoidCombo {
  std::vector<long long> coeffs;
};

std::optional<MonoidCombo> monoidMemberBounded(const ConeOrder& c, const IntVector& d,
                                               long long bound);

// Full-rank rational weight matrix; rows compared lexicographically give a
// translation-invariant linear order on Z^k.
class WeightOrder {
public:
  WeightOrder(int dim, RatMatrix rows);

  int dim() const { return dim_; }
  const RatMatrix& rows() const { return rows_; }

private:
  int dim_;
  RatMatrix rows_; // rank == dim_
};

enum class Cmp { Less, Equal, Greater };

// Lexicographic comparison through the weight rows. Equal iff x = y, by the
// rank invariant. Throws MalformedInput on dimension mismatch.
Cmp weightCompare(const WeightOrder& w, const IntVector& x, const IntVector& y);

// Linear order on Z^k extending the cone order: first row is the positive
// Gordan weight, then standard basis vectors appended while the rank grows.
// Requires a pointed cone; otherwise throws ConeNotPointedError carrying the
// zero combination.
WeightOrder weightExtension(const ConeOrder& c);

// Linear order extending the cone order with x strictly below y. Requires
// y !<=_G x, i.e. a separating weight for x - y, and a pointed cone. The
// separating weight is the first row; the generators it annihilates get a
// strictly positive weight inside its null space, recursively; standard
// basis vectors complete the rank.
WeightOrder separatingExtension(const ConeOrder& c, const IntVector& x,
                                const IntVector& y);

class ConeNotPointedError : public Error {
public:
  ConeNotPointedError(std::string message, ZeroCombo combo)
      : Error(ErrorKind::ConeNotPointed, std::move(message)),
        combo_(std::move(combo)) {}
  const ZeroCombo& combo() const { return combo_; }

private:
  ZeroCombo combo_;
};

class SeparationBlockedError : public Error {
public:
  SeparationBlockedError(std::string message, Combo combo)
      : Error(ErrorKind::PrecedenceBlocked, std::move(message)),
        combo_(std::move(combo)) {}
  const Combo& combo() const { return combo_; }

private:
  Combo combo_;
};

} // namespace invord
