#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "invord/action.hpp"
#include "invord/relation.hpp"

namespace invord {

// x <=_G y iff the identity lies in the subsemigroup of G generated by
// H(x,y) = { g : x <= g y }. Equivalent to the finite-sequence definition:
// the sequence is a multiset of H-elements with product e. Accepts preorders
// (the condensation route makes the two readings agree; see leqG).
// Returns the witnessing multiset when x <=_G y, nullopt otherwise.
std::optional<SemigroupWitness> leqGWitness(const PermAction& a, const Relation& leq,
                                            int x, int y);

// The full relation <=_G. Validates that `a` is abelian and `leq` a
// G-invariant preorder; throws NonAbelian / NotAPreorder / NotInvariant /
// UniverseMismatch. The result is a G-invariant preorder extending leq.
Relation leqG(const PermAction& a, const Relation& leq);

// One extension step: the transitive closure of leq together with the orbit
// {(gx, gy) : g in G}. Requires not(y <=_G x); when that fails the throw
// carries the semigroup witness. The result is again a G-invariant partial
// order, now with x <=* y; an antisymmetry failure here is impossible under
// the precondition and raises std::logic_error.
Relation extendStep(const PermAction& a, const Relation& leq, int x, int y);

// G-invariant linear order extending leq, built by iterating extendStep on
// the lexicographically smallest pair (x,y) with x !<= y and y !<=_G x.
// When some element has a finite orbit of size > 1 no such order exists and
// the witness is returned instead.
std::variant<Relation, FiniteOrbitWitness>
invariantLinearExtension(const PermAction& a, const Relation& leq);

// G-invariant linear preorder extending the G-invariant preorder leq,
// preserving every strict pair. Pipeline: condense mutual-<= classes,
// quotient by ~G, order the classes through <=_G representatives, extend
// linearly on the quotient, lift back.
Relation invariantLinearPreorderExtension(const PermAction& a, const Relation& leq);

// Intersection of all G-invariant linear orders extending leq. Requires the
// no-finite-orbit condition (throws ConditionFailed with witness text) and a
// universe of at most `cap` points. The result is checked against
// leqG(a, leq) before returning; a mismatch raises std::logic_error.
Relation intersectionOfInvariantExtensions(const PermAction& a, const Relation& leq,
                                           int cap = limits::kIntersection);

// Strong invariance: x <= y iff gx <= y iff x <= gy, for every element g.
struct StrongInvarianceResult {
  bool holds;
  struct Witness {
    int element;
    int x;
    int y;
    bool leftSide; // true: x<=y vs gx<=y differ; false: x<=y vs x<=gy differ
  };
  std::optional<Witness> witness;
};

StrongInvarianceResult isStronglyInvariant(const Relation& r, const PermAction& a);

// Invariant linear preorder on the powerset of the base universe in which
// proper inclusion is strict. Base universe capped at `cap` points.
struct PowersetPreorder {
  PermAction action;   // the induced action on subsets
  Relation order;      // the invariant linear preorder on subsets
  std::vector<uint32_t> masks; // subset bitmasks in universe order
};

PowersetPreorder powersetPreorder(const PermAction& a, int cap = limits::kPowersetBase);

// "0~1 < 2~3" rendering of a linear preorder.
std::string chainSummary(const Relation& linearPreorder);

} // namespace invord
