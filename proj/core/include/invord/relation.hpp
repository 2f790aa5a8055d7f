#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invord/universe.hpp"

namespace invord {

class PermAction;

// Binary relation over a finite universe, stored as one 64-bit mask per row.
// Entry (i,j) reads "i <= j". Values are treated as immutable once built;
// every operation below returns a fresh relation.
class Relation {
public:
  explicit Relation(Universe universe);

  static Relation equality(Universe universe);
  static Relation full(Universe universe);
  static Relation fromPairs(Universe universe,
                            const std::vector<std::pair<int, int>>& pairs,
                            bool reflexiveClose = false);

  const Universe& universe() const { return universe_; }
  int size() const { return universe_.size(); }

  bool at(int i, int j) const { return (rows_[i] >> j) & 1u; }
  void set(int i, int j, bool value = true);
  uint64_t row(int i) const { return rows_[i]; }

  std::vector<std::pair<int, int>> pairs() const;
  int pairCount() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.universe_ == b.universe_ && a.rows_ == b.rows_;
  }

private:
  Universe universe_;
  std::vector<uint64_t> rows_;
};

struct RelationClass {
  bool reflexive = false;
  bool transitive = false;
  bool antisymmetric = false;
  bool symmetric = false;
  bool total = false;

  bool isPreorder() const { return reflexive && transitive; }
  bool isPartialOrder() const { return isPreorder() && antisymmetric; }
  bool isLinearPreorder() const { return isPreorder() && total; }
  bool isLinearOrder() const { return isPartialOrder() && total; }
  bool isEquivalence() const { return isPreorder() && symmetric; }

  // Every kind the relation satisfies, most generic first. Empty means raw.
  std::vector<std::string> kinds() const;
};

RelationClass classify(const Relation& r);

// Smallest transitive superset (Warshall). Idempotent.
Relation transitiveClosure(const Relation& r);

// (i,j) iff r(i,j) and not r(j,i). Irreflexive.
Relation strictPart(const Relation& r);

// Subset test: every pair of a is a pair of b.
bool extends(const Relation& sub, const Relation& super);

Relation intersect(const Relation& a, const Relation& b);
Relation unite(const Relation& a, const Relation& b);

// Deterministic Szpilrajn extension of a partial order: repeatedly emits the
// smallest-index minimal element among those remaining.
// Throws NotAPartialOrder.
Relation topoLinearExtension(const Relation& r);

// All linear orders extending the partial order r, each exactly once, in
// lexicographic order of the emitted chains. When an action is given, only
// G-invariant ones are kept. Throws CapExceeded above `cap` points.
void enumerateLinearExtensions(const Relation& r, const PermAction* invariantUnder,
                               const std::function<void(const Relation&)>& sink,
                               int cap = limits::kEnumeration);
std::vector<Relation> allLinearExtensions(const Relation& r,
                                          const PermAction* invariantUnder = nullptr,
                                          int cap = limits::kEnumeration);

// Transitive reduction of the strict part of a partial order.
Relation hasseEdges(const Relation& r);

// DOT rendering of the Hasse diagram. Throws NotAPartialOrder.
std::string hasseDot(const Relation& r, const std::string& name = "hasse");

// Equivalence classes by mutual comparability, and the induced partial order
// on them. Representatives are the smallest member of each class.
struct Condensation {
  std::vector<int> representative; // element -> smallest element of its class
  std::vector<int> classIndex;     // element -> dense class id
  std::vector<std::vector<int>> classes;
};

Condensation condense(const Relation& preorder);
Relation condensedOrder(const Relation& preorder, const Condensation& c);

} // namespace invord
