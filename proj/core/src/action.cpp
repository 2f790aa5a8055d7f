#include "invord/action.hpp"

#include <algorithm>
#include <numeric>

namespace invord {

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  const int n = static_cast<int>(map_.size());
  std::vector<bool> hit(n, false);
  for (int v : map_) {
    if (v < 0 || v >= n || hit[v])
      throw Error(ErrorKind::MalformedInput, "permutation map is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> m(map_.size());
  for (int i = 0; i < size(); ++i) m[map_[i]] = i;
  return Permutation(std::move(m));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<int> m(a.size());
  for (int i = 0; i < a.size(); ++i) m[i] = a.map_[b.map_[i]];
  return Permutation(std::move(m));
}

int Permutation::order() const {
  Permutation p = *this;
  const Permutation id = identity(size());
  int k = 1;
  while (!(p == id)) {
    p = *this * p;
    ++k;
  }
  return k;
}

std::vector<int> Permutation::cycleOf(int x) const {
  std::vector<int> out{x};
  for (int y = map_[x]; y != x; y = map_[y]) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

EquivalenceClasses EquivalenceClasses::fromRepresentatives(std::vector<int> representative) {
  EquivalenceClasses e;
  e.representative = std::move(representative);
  const int n = static_cast<int>(e.representative.size());
  e.classIndex.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = e.representative[i];
    if (e.classIndex[r] < 0) {
      e.classIndex[r] = static_cast<int>(e.classes.size());
      e.classes.push_back({});
    }
    e.classIndex[i] = e.classIndex[r];
    e.classes[e.classIndex[r]].push_back(i);
  }
  return e;
}

PermAction::PermAction(Universe universe, std::vector<NamedGenerator> generators)
    : universe_(std::move(universe)), generators_(std::move(generators)) {}

int PermAction::indexOf(const Permutation& p) const {
  auto it = index_.find(p.map());
  return it == index_.end() ? -1 : it->second;
}

int PermAction::multiply(int a, int b) const {
  return indexOf(elements_[a].perm * elements_[b].perm);
}

PermAction generateGroup(Universe universe, std::vector<NamedGenerator> generators,
                         bool allowNonabelian, int closureCap) {
  for (const auto& g : generators)
    if (g.perm.size() != universe.size())
      throw Error(ErrorKind::MalformedInput,
                  "generator '" + g.name + "' does not act on the universe");

  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j)
      if (!(generators[i].perm * generators[j].perm ==
            generators[j].perm * generators[i].perm) &&
          !allowNonabelian)
        throw Error(ErrorKind::NonAbelian, "generators '" + generators[i].name +
                                               "' and '" + generators[j].name +
                                               "' do not commute");

  PermAction a(std::move(universe), std::move(generators));
  a.abelian_ = true;
  for (size_t i = 0; i < a.generators_.size() && a.abelian_; ++i)
    for (size_t j = i + 1; j < a.generators_.size() && a.abelian_; ++j)
      if (!(a.generators_[i].perm * a.generators_[j].perm ==
            a.generators_[j].perm * a.generators_[i].perm))
        a.abelian_ = false;

  a.elements_.push_back({Permutation::identity(a.degree()), {}});
  a.index_[a.elements_[0].perm.map()] = 0;
  for (size_t head = 0; head < a.elements_.size(); ++head) {
    for (size_t gi = 0; gi < a.generators_.size(); ++gi) {
      Permutation next = a.generators_[gi].perm * a.elements_[head].perm;
      if (a.index_.count(next.map())) continue;
      if (static_cast<int>(a.elements_.size()) >= closureCap)
        throw Error(ErrorKind::CapExceeded,
                    "group closure exceeds cap " + std::to_string(closureCap));
      std::vector<int> word = a.elements_[head].word;
      word.push_back(static_cast<int>(gi));
      a.index_[next.map()] = static_cast<int>(a.elements_.size());
      a.elements_.push_back({std::move(next), std::move(word)});
    }
  }

  a.inverse_.resize(a.elements_.size());
  for (size_t i = 0; i < a.elements_.size(); ++i)
    a.inverse_[i] = a.indexOf(a.elements_[i].perm.inverse());
  return a;
}

PermAction trivialAction(Universe universe) {
  return generateGroup(std::move(universe), {});
}

EquivalenceClasses orbits(const PermAction& a) {
  const int n = a.degree();
  std::vector<int> rep(n, -1);
  for (int i = 0; i < n; ++i) {
    if (rep[i] >= 0) continue;
    // breadth-first over generator moves from the smallest unseen point
    std::vector<int> stack{i};
    rep[i] = i;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      // forward moves reach the whole orbit: an inverse is a power
      for (const auto& g : a.generators()) {
        int y = g.perm.apply(x);
        if (rep[y] < 0) {
          rep[y] = i;
          stack.push_back(y);
        }
      }
    }
  }
  return EquivalenceClasses::fromRepresentatives(std::move(rep));
}

std::vector<int> elementOrbit(const Permutation& g, int x) { return g.cycleOf(x); }

OrbitConditionResult conditionNoFiniteOrbits(const PermAction& a) {
  OrbitConditionResult res{true, std::nullopt};
  for (int gi = 0; gi < a.order() && res.holds; ++gi) {
    const Permutation& g = a.element(gi).perm;
    for (int x = 0; x < a.degree(); ++x) {
      std::vector<int> orbit = g.cycleOf(x);
      if (orbit.size() > 1) {
        res.holds = false;
        res.witness = FiniteOrbitWitness{gi, std::move(orbit)};
        break;
      }
    }
  }
  // On a finite universe the condition is equivalent to the group acting as
  // the identity alone.
  if (res.holds != (a.order() == 1))
    throw std::logic_error("conditionNoFiniteOrbits: literal scan disagrees with shortcut");
  return res;
}

Relation simG(const PermAction& a) {
  Relation out(a.universe());
  for (int gi = 0; gi < a.order(); ++gi) {
    const Permutation& g = a.element(gi).perm;
    const int ord = g.order();
    for (int y = 0; y < a.degree(); ++y) {
      bool fixesEventually = false;
      int img = y;
      for (int n = 1; n <= ord && !fixesEventually; ++n) {
        img = g.apply(img);
        if (img == y) fixesEventually = true;
      }
      if (fixesEventually) out.set(g.apply(y), y);
    }
  }
  return out;
}

EquivalenceClasses relationClasses(const Relation& equivalence) {
  const int n = equivalence.size();
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) {
    rep[i] = i;
    for (int j = 0; j < i; ++j)
      if (equivalence.at(i, j) && equivalence.at(j, i)) {
        rep[i] = rep[j];
        break;
      }
  }
  return EquivalenceClasses::fromRepresentatives(std::move(rep));
}

namespace {

InvarianceResult checkInvariance(const Relation& r, const PermAction& a, bool allElements) {
  if (!compatibleUniverses(r.universe(), a.universe()))
    throw Error(ErrorKind::UniverseMismatch,
                "isInvariant: relation and action universes differ");
  InvarianceResult res{true, std::nullopt};
  const int n = r.size();
  auto scan = [&](const Permutation& g, int tag) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (r.at(x, y) != r.at(g.apply(x), g.apply(y))) {
          res.invariant = false;
          res.witness = InvarianceResult::Witness{tag, x, y};
          return false;
        }
    return true;
  };
  if (allElements) {
    for (int gi = 0; gi < a.order(); ++gi)
      if (!scan(a.element(gi).perm, gi)) break;
  } else {
    for (size_t gi = 0; gi < a.generators().size(); ++gi)
      if (!scan(a.generators()[gi].perm, static_cast<int>(gi))) break;
  }
  return res;
}

} // namespace

InvarianceResult isInvariant(const Relation& r, const PermAction& a) {
  return checkInvariance(r, a, false);
}

InvarianceResult isInvariantAllElements(const Relation& r, const PermAction& a) {
  return checkInvariance(r, a, true);
}

PermAction quotientAction(const PermAction& a, const EquivalenceClasses& sim) {
  const int m = static_cast<int>(sim.classes.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& cls : sim.classes) labels.push_back(a.universe().label(cls[0]));
  Universe qu(m, std::move(labels));

  std::vector<NamedGenerator> qgens;
  for (const auto& g : a.generators()) {
    std::vector<int> qmap(m);
    for (int c = 0; c < m; ++c) qmap[c] = sim.classIndex[g.perm.apply(sim.classes[c][0])];
    // well-definedness: every member of the class must land in the same
    // class; when this holds the induced map is automatically a bijection
    for (int x = 0; x < a.degree(); ++x)
      if (sim.classIndex[g.perm.apply(x)] != qmap[sim.classIndex[x]])
        throw Error(ErrorKind::QuotientIllDefined,
                    "generator '" + g.name +
                        "' does not respect the classes (is sim = simG of an "
                        "abelian action?)");
    qgens.push_back({g.name, Permutation(std::move(qmap))});
  }
  PermAction q = generateGroup(std::move(qu), std::move(qgens), !a.abelian());

  // the point of the construction: on the quotient, ~G is equality
  Relation qsim = simG(q);
  if (!(qsim == Relation::equality(q.universe())))
    throw Error(ErrorKind::QuotientIllDefined,
                "quotient still identifies distinct classes (is sim = simG?)");
  return q;
}

std::vector<uint32_t> powersetMasks(int n) {
  std::vector<uint32_t> masks;
  masks.reserve(size_t{1} << n);
  for (uint32_t m = 0; m < (uint32_t{1} << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](uint32_t x, uint32_t y) {
    int px = __builtin_popcount(x), py = __builtin_popcount(y);
    return px != py ? px < py : x < y;
  });
  return masks;
}

namespace {

std::string subsetLabel(const Universe& base, uint32_t mask) {
  if (mask == 0) return "∅";
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < base.size(); ++i)
    if ((mask >> i) & 1u) {
      if (!first) out += ",";
      out += base.label(i);
      first = false;
    }
  return out + "}";
}

} // namespace

PermAction powersetAction(const PermAction& a, int cap) {
  const int n = a.degree();
  if (n > cap)
    throw Error(ErrorKind::CapExceeded, "powersetAction: base universe size " +
                                            std::to_string(n) + " exceeds cap " +
                                            std::to_string(cap));
  std::vector<uint32_t> masks = powersetMasks(n);
  const int m = static_cast<int>(masks.size());
  std::vector<int> indexOfMask(size_t{1} << n);
  for (int i = 0; i < m; ++i) indexOfMask[masks[i]] = i;

  std::vector<std::string> labels;
  labels.reserve(m);
  for (uint32_t mask : masks) labels.push_back(subsetLabel(a.universe(), mask));
  Universe pu(m, std::move(labels));

  std::vector<NamedGenerator> pgens;
  for (const auto& g : a.generators()) {
    std::vector<int> pmap(m);
    for (int i = 0; i < m; ++i) {
      uint32_t image = 0;
      for (int x = 0; x < n; ++x)
        if ((masks[i] >> x) & 1u) image |= uint32_t{1} << g.perm.apply(x);
      pmap[i] = indexOfMask[image];
    }
    pgens.push_back({g.name, Permutation(std::move(pmap))});
  }
  return generateGroup(std::move(pu), std::move(pgens), !a.abelian());
}

Relation inclusionOrder(const PermAction& powerset, const std::vector<uint32_t>& masks) {
  Relation out(powerset.universe());
  const int m = static_cast<int>(masks.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((masks[i] & ~masks[j]) == 0) out.set(i, j);
  return out;
}

} // namespace invord
