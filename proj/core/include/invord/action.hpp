#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invord/relation.hpp"
#include "invord/universe.hpp"

namespace invord {

// Bijection on 0..n-1.
class Permutation {
public:
  explicit Permutation(std::vector<int> map);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int apply(int x) const { return map_[x]; }
  const std::vector<int>& map() const { return map_; }

  Permutation inverse() const;
  // (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.map_ == b.map_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.map_ < b.map_;
  }

  // Smallest k >= 1 with perm^k = id.
  int order() const;
  // {perm^n(x) : n in Z}, ascending.
  std::vector<int> cycleOf(int x) const;

private:
  std::vector<int> map_;
};

// Group element together with the generator word that produced it.
// word lists generator indices, applied left to right:
// word (i1,...,ik) evaluates to gen[ik] * ... * gen[i1].
struct GroupElem {
  Permutation perm;
  std::vector<int> word;
};

struct NamedGenerator {
  std::string name;
  Permutation perm;
};

// Partition of a universe, each element mapped to its smallest-index
// representative.
struct EquivalenceClasses {
  std::vector<int> representative;
  std::vector<int> classIndex;
  std::vector<std::vector<int>> classes;

  static EquivalenceClasses fromRepresentatives(std::vector<int> representative);
};

// A finite group acting on a universe, presented by generator permutations
// and closed under composition. The group is represented by its image in the
// symmetric group of the universe: every statement in this library depends
// only on how elements act, so the image is all we keep.
class PermAction {
public:
  const Universe& universe() const { return universe_; }
  int degree() const { return universe_.size(); }
  const std::vector<NamedGenerator>& generators() const { return generators_; }
  const std::vector<GroupElem>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool abelian() const { return abelian_; }
  bool trivial() const { return elements_.size() == 1; }

  const GroupElem& element(int i) const { return elements_[i]; }
  // Index of the given permutation among elements(); -1 if absent.
  int indexOf(const Permutation& p) const;
  int identityIndex() const { return 0; }
  int multiply(int a, int b) const;
  int inverseOf(int a) const { return inverse_[a]; }

  friend PermAction generateGroup(Universe universe,
                                  std::vector<NamedGenerator> generators,
                                  bool allowNonabelian, int closureCap);

private:
  PermAction(Universe universe, std::vector<NamedGenerator> generators);

  Universe universe_;
  std::vector<NamedGenerator> generators_;
  std::vector<GroupElem> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> inverse_;
  bool abelian_ = true;
};

// Closes the generators under composition (BFS, deterministic element order;
// elements_[0] is the identity). Throws MalformedInput for non-bijections,
// NonAbelian when generators do not commute and the flag is unset,
// CapExceeded when the closure outgrows `closureCap`.
PermAction generateGroup(Universe universe, std::vector<NamedGenerator> generators,
                         bool allowNonabelian = false,
                         int closureCap = limits::kGroupClosure);

PermAction trivialAction(Universe universe);

// Orbit partition of the universe under the whole group.
EquivalenceClasses orbits(const PermAction& a);

// Orbit of x under the cyclic group generated by one element.
std::vector<int> elementOrbit(const Permutation& g, int x);

struct FiniteOrbitWitness {
  int element; // index into elements()
  std::vector<int> orbit;
};

struct OrbitConditionResult {
  bool holds;
  std::optional<FiniteOrbitWitness> witness;
};

// Whether no element of the group has an orbit of size greater than one.
// On a finite universe every orbit is finite, so this holds exactly when the
// group acts as the identity; the literal scan below is checked against that
// shortcut in the test suites.
OrbitConditionResult conditionNoFiniteOrbits(const PermAction& a);

// The relation x ~ y iff some g has gy = x and g^n y = y for some n >= 1,
// evaluated literally over all elements and exponents. An equivalence when
// the group is abelian; on a finite universe it coincides with the G-orbit
// partition (every permutation has finite order), which the suites check.
Relation simG(const PermAction& a);

EquivalenceClasses relationClasses(const Relation& equivalence);

// G-invariance of r: r(x,y) iff r(gx, gy). Checking the generators suffices
// because invariance is preserved under composition and inverse; the test
// suite exercises that reduction against an all-elements scan.
struct InvarianceResult {
  bool invariant;
  struct Witness {
    int generator;
    int x;
    int y;
  };
  std::optional<Witness> witness;
};

InvarianceResult isInvariant(const Relation& r, const PermAction& a);
// Same check quantified over every group element; used by tests.
InvarianceResult isInvariantAllElements(const Relation& r, const PermAction& a);

// Action induced on the classes of sim (intended: sim = classes of simG(a)).
// Verifies that each generator maps classes to classes; a violation throws
// QuotientIllDefined and signals sim != simG or a non-abelian input.
// Class k of the quotient universe is labelled by its representative.
PermAction quotientAction(const PermAction& a, const EquivalenceClasses& sim);

// Action induced on all 2^n subsets, ordered by (cardinality, bitmask).
// Throws CapExceeded when the base universe exceeds `cap`.
PermAction powersetAction(const PermAction& a, int cap = limits::kPowersetBase);

// Subset universe of the powerset construction, with its inclusion order.
std::vector<uint32_t> powersetMasks(int n);
Relation inclusionOrder(const PermAction& powerset, const std::vector<uint32_t>& masks);

} // namespace invord
