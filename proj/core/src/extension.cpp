#include "invord/extension.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

namespace invord {

namespace {

void requireCompatible(const PermAction& a, const Relation& leq, const char* who) {
  if (!compatibleUniverses(a.universe(), leq.universe()))
    throw Error(ErrorKind::UniverseMismatch,
                std::string(who) + ": relation and action universes differ");
}

void requireAbelian(const PermAction& a, const char* who) {
  if (!a.abelian())
    throw Error(ErrorKind::NonAbelian, std::string(who) + ": the action is not abelian");
}

void requireInvariantPreorder(const PermAction& a, const Relation& leq, const char* who) {
  RelationClass cls = classify(leq);
  if (!cls.isPreorder())
    throw Error(ErrorKind::NotAPreorder, std::string(who) + ": input is not a preorder");
  InvarianceResult inv = isInvariant(leq, a);
  if (!inv.invariant) {
    std::ostringstream os;
    os << who << ": input is not G-invariant (generator '"
       << a.generators()[inv.witness->generator].name << "' at pair ("
       << inv.witness->x << "," << inv.witness->y << "))";
    throw Error(ErrorKind::NotInvariant, os.str());
  }
}

void requireInvariantPartialOrder(const PermAction& a, const Relation& leq,
                                  const char* who) {
  requireInvariantPreorder(a, leq, who);
  if (!classify(leq).antisymmetric)
    throw Error(ErrorKind::NotAPartialOrder,
                std::string(who) + ": input is not antisymmetric");
}

} // namespace

std::optional<SemigroupWitness> leqGWitness(const PermAction& a, const Relation& leq,
                                            int x, int y) {
  // H(x,y) = { g : x <= g y }
  std::vector<int> h;
  for (int gi = 0; gi < a.order(); ++gi)
    if (leq.at(x, a.element(gi).perm.apply(y))) h.push_back(gi);
  if (h.empty()) return std::nullopt;

  // Subsemigroup closure of H, remembering one product decomposition each.
  const int e = a.identityIndex();
  std::vector<int> parent(a.order(), -1); // predecessor element in the closure
  std::vector<int> via(a.order(), -1);    // H-element appended last
  std::vector<bool> inClosure(a.order(), false);
  std::vector<int> work;
  for (int gi : h)
    if (!inClosure[gi]) {
      inClosure[gi] = true;
      via[gi] = gi;
      work.push_back(gi);
    }
  for (size_t head = 0; head < work.size(); ++head) {
    int cur = work[head];
    for (int gi : h) {
      int prod = a.multiply(cur, gi);
      if (!inClosure[prod]) {
        inClosure[prod] = true;
        parent[prod] = cur;
        via[prod] = gi;
        work.push_back(prod);
      }
    }
  }
  if (!inClosure[e]) return std::nullopt;

  SemigroupWitness w;
  for (int cur = e; cur >= 0; cur = parent[cur]) w.elems.push_back(via[cur]);
  std::reverse(w.elems.begin(), w.elems.end());
  return w;
}

Relation leqG(const PermAction& a, const Relation& leq) {
  requireCompatible(a, leq, "leqG");
  requireAbelian(a, "leqG");
  requireInvariantPreorder(a, leq, "leqG");
  Relation out(leq.universe());
  for (int x = 0; x < leq.size(); ++x)
    for (int y = 0; y < leq.size(); ++y)
      if (leqGWitness(a, leq, x, y)) out.set(x, y);
  return out;
}

Relation extendStep(const PermAction& a, const Relation& leq, int x, int y) {
  requireCompatible(a, leq, "extendStep");
  requireAbelian(a, "extendStep");
  requireInvariantPartialOrder(a, leq, "extendStep");
  if (x < 0 || x >= leq.size() || y < 0 || y >= leq.size())
    throw Error(ErrorKind::MalformedInput, "extendStep: pair out of range");

  if (auto witness = leqGWitness(a, leq, y, x)) {
    std::ostringstream os;
    os << "extendStep: cannot place " << x << " below " << y << ": " << y
       << " <=_G " << x;
    throw PrecedenceError(os.str(), std::move(*witness));
  }

  Relation out = leq;
  for (int gi = 0; gi < a.order(); ++gi) {
    const Permutation& g = a.element(gi).perm;
    out.set(g.apply(x), g.apply(y));
  }
  out = transitiveClosure(out);

  // The loop argument behind the precondition rules out any cycle through
  // the new pairs, so a failure here is a bug, not an input error.
  if (!classify(out).antisymmetric)
    throw std::logic_error("extendStep: closure broke antisymmetry");
  return out;
}

std::variant<Relation, FiniteOrbitWitness>
invariantLinearExtension(const PermAction& a, const Relation& leq) {
  requireCompatible(a, leq, "invariantLinearExtension");
  requireAbelian(a, "invariantLinearExtension");
  requireInvariantPartialOrder(a, leq, "invariantLinearExtension");

  OrbitConditionResult cond = conditionNoFiniteOrbits(a);
  if (!cond.holds) return *cond.witness;

  Relation r = leq;
  const int n = r.size();
  for (;;) {
    Relation lg = leqG(a, r);
    int px = -1, py = -1;
    for (int x = 0; x < n && px < 0; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && !r.at(x, y) && !lg.at(y, x)) {
          px = x;
          py = y;
          break;
        }
    if (px < 0) {
      if (!classify(r).total)
        throw std::logic_error(
            "invariantLinearExtension: no admissible pair on a non-linear order");
      return r;
    }
    r = extendStep(a, r, px, py);
  }
}

namespace {

// The quotient pipeline state shared by the preorder extension.
struct QuotientPipeline {
  Condensation mutual;       // classes of x ~ y (mutual leq)
  PermAction condensedAction;
  Relation condensedOrder;   // induced partial order on the condensation
  EquivalenceClasses simClasses;
  PermAction quotient;       // action on the ~G classes of the condensation
};

PermAction descendAction(const PermAction& a, const Condensation& c,
                         const Universe& target) {
  std::vector<NamedGenerator> gens;
  for (const auto& g : a.generators()) {
    std::vector<int> qmap(c.classes.size());
    for (size_t k = 0; k < c.classes.size(); ++k)
      qmap[k] = c.classIndex[g.perm.apply(c.classes[k][0])];
    for (int x = 0; x < a.degree(); ++x)
      if (c.classIndex[g.perm.apply(x)] != qmap[c.classIndex[x]])
        throw Error(ErrorKind::QuotientIllDefined,
                    "generator '" + g.name + "' does not respect mutual-<= classes");
    gens.push_back({g.name, Permutation(std::move(qmap))});
  }
  return generateGroup(target, std::move(gens), !a.abelian());
}

} // namespace

Relation invariantLinearPreorderExtension(const PermAction& a, const Relation& leq) {
  requireCompatible(a, leq, "invariantLinearPreorderExtension");
  requireAbelian(a, "invariantLinearPreorderExtension");
  requireInvariantPreorder(a, leq, "invariantLinearPreorderExtension");
  const int n = leq.size();

  // 1. collapse mutual comparability; the induced order is a partial order
  Condensation mutual = condense(leq);
  Relation cord = condensedOrder(leq, mutual);
  PermAction caction = descendAction(a, mutual, cord.universe());

  // 2. quotient the condensation by ~G
  EquivalenceClasses simClasses = relationClasses(simG(caction));
  PermAction quotient = quotientAction(caction, simClasses);
  const int m = quotient.degree();

  // 3. order the classes through <=_G representatives
  Relation lg = leqG(caction, cord);
  Relation classOrder(quotient.universe());
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      bool related = false;
      for (int xs : simClasses.classes[u])
        for (int ys : simClasses.classes[v])
          if (lg.at(xs, ys)) related = true;
      if (related) classOrder.set(u, v);
    }

  // the plain-<= reading of the class order agrees on finite instances;
  // a mismatch is logged, not fatal
  {
    Relation alt(quotient.universe());
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) {
        bool related = false;
        for (int xs : simClasses.classes[u])
          for (int ys : simClasses.classes[v])
            if (cord.at(xs, ys)) related = true;
        if (related) alt.set(u, v);
      }
    if (!(alt == classOrder))
      std::clog << "invariantLinearPreorderExtension: <=-based and <=_G-based "
                   "class orders disagree\n";
  }

  if (!classify(classOrder).isPartialOrder())
    throw std::logic_error(
        "invariantLinearPreorderExtension: class order is not a partial order");

  // 4. extend on the quotient; its action satisfies the orbit condition
  auto extended = invariantLinearExtension(quotient, classOrder);
  if (!std::holds_alternative<Relation>(extended))
    throw std::logic_error(
        "invariantLinearPreorderExtension: quotient action failed the orbit condition");
  const Relation& lin = std::get<Relation>(extended);

  // 5. lift through both quotients
  Relation out(leq.universe());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int cx = simClasses.classIndex[mutual.classIndex[x]];
      int cy = simClasses.classIndex[mutual.classIndex[y]];
      if (lin.at(cx, cy)) out.set(x, y);
    }
  return out;
}

Relation intersectionOfInvariantExtensions(const PermAction& a, const Relation& leq,
                                           int cap) {
  requireCompatible(a, leq, "intersectionOfInvariantExtensions");
  requireAbelian(a, "intersectionOfInvariantExtensions");
  requireInvariantPartialOrder(a, leq, "intersectionOfInvariantExtensions");
  if (leq.size() > cap)
    throw Error(ErrorKind::CapExceeded,
                "intersectionOfInvariantExtensions: universe size " +
                    std::to_string(leq.size()) + " exceeds cap " + std::to_string(cap));
  OrbitConditionResult cond = conditionNoFiniteOrbits(a);
  if (!cond.holds) {
    std::ostringstream os;
    os << "intersectionOfInvariantExtensions: element " << cond.witness->element
       << " has a finite orbit of size " << cond.witness->orbit.size();
    throw Error(ErrorKind::ConditionFailed, os.str());
  }

  Relation acc = Relation::full(leq.universe());
  bool any = false;
  enumerateLinearExtensions(leq, &a, [&](const Relation& lin) {
    acc = intersect(acc, lin);
    any = true;
  }, cap);
  if (!any)
    throw std::logic_error(
        "intersectionOfInvariantExtensions: no invariant extension exists");

  // the intersection characterizes <=_G; check it on the spot
  if (!(acc == leqG(a, leq)))
    throw std::logic_error(
        "intersectionOfInvariantExtensions: intersection differs from leqG");
  return acc;
}

StrongInvarianceResult isStronglyInvariant(const Relation& r, const PermAction& a) {
  if (!compatibleUniverses(r.universe(), a.universe()))
    throw Error(ErrorKind::UniverseMismatch,
                "isStronglyInvariant: relation and action universes differ");
  StrongInvarianceResult res{true, std::nullopt};
  const int n = r.size();
  for (int gi = 0; gi < a.order(); ++gi) {
    const Permutation& g = a.element(gi).perm;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (r.at(x, y) != r.at(g.apply(x), y)) {
          res.holds = false;
          res.witness = StrongInvarianceResult::Witness{gi, x, y, true};
          return res;
        }
        if (r.at(x, y) != r.at(x, g.apply(y))) {
          res.holds = false;
          res.witness = StrongInvarianceResult::Witness{gi, x, y, false};
          return res;
        }
      }
  }
  return res;
}

PowersetPreorder powersetPreorder(const PermAction& a, int cap) {
  requireAbelian(a, "powersetPreorder");
  PermAction pact = powersetAction(a, cap);
  std::vector<uint32_t> masks = powersetMasks(a.degree());
  Relation incl = inclusionOrder(pact, masks);
  Relation order = invariantLinearPreorderExtension(pact, incl);
  return PowersetPreorder{std::move(pact), std::move(order), std::move(masks)};
}

std::string chainSummary(const Relation& linearPreorder) {
  RelationClass cls = classify(linearPreorder);
  if (!cls.isLinearPreorder())
    throw Error(ErrorKind::NotAPreorder,
                "chainSummary: relation is not a linear preorder");
  Condensation c = condense(linearPreorder);
  // sort classes bottom-up
  std::vector<int> idx(c.classes.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int u, int v) {
    if (u == v) return false;
    return linearPreorder.at(c.classes[u][0], c.classes[v][0]) &&
           !linearPreorder.at(c.classes[v][0], c.classes[u][0]);
  });
  std::ostringstream os;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) os << " < ";
    const auto& members = c.classes[idx[i]];
    for (size_t j = 0; j < members.size(); ++j) {
      if (j) os << "~";
      os << linearPreorder.universe().label(members[j]);
    }
  }
  return os.str();
}

} // namespace invord
