#include "invord/relation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "invord/action.hpp"

namespace invord {

Universe::Universe(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size_ < 1)
    throw Error(ErrorKind::MalformedInput, "universe size must be >= 1");
  if (size_ > limits::kUniverseHard)
    throw Error(ErrorKind::CapExceeded,
                "universe size " + std::to_string(size_) + " exceeds hard cap " +
                    std::to_string(limits::kUniverseHard));
  if (static_cast<int>(labels_.size()) != size_)
    throw Error(ErrorKind::MalformedInput, "label count does not match universe size");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != size_)
    throw Error(ErrorKind::MalformedInput, "universe labels must be distinct");
}

std::vector<std::string> Universe::defaultLabels(int size) {
  std::vector<std::string> out;
  out.reserve(std::max(size, 0));
  for (int i = 0; i < size; ++i) out.push_back(std::to_string(i));
  return out;
}

bool Universe::hasDefaultLabels() const { return labels_ == defaultLabels(size_); }

bool compatibleUniverses(const Universe& a, const Universe& b) {
  if (a.size() != b.size()) return false;
  return a == b || a.hasDefaultLabels() || b.hasDefaultLabels();
}

Universe mergeUniverses(const Universe& a, const Universe& b) {
  if (!compatibleUniverses(a, b))
    throw Error(ErrorKind::UniverseMismatch, "universes are not compatible");
  return a.hasDefaultLabels() ? b : a;
}

Relation::Relation(Universe universe)
    : universe_(std::move(universe)), rows_(universe_.size(), 0) {}

Relation Relation::equality(Universe universe) {
  Relation r(std::move(universe));
  for (int i = 0; i < r.size(); ++i) r.set(i, i);
  return r;
}

Relation Relation::full(Universe universe) {
  Relation r(std::move(universe));
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j) r.set(i, j);
  return r;
}

Relation Relation::fromPairs(Universe universe,
                             const std::vector<std::pair<int, int>>& pairs,
                             bool reflexiveClose) {
  Relation r(std::move(universe));
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= r.size() || j < 0 || j >= r.size())
      throw Error(ErrorKind::MalformedInput,
                  "pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range");
    r.set(i, j);
  }
  if (reflexiveClose)
    for (int i = 0; i < r.size(); ++i) r.set(i, i);
  return r;
}

void Relation::set(int i, int j, bool value) {
  if (value)
    rows_[i] |= uint64_t{1} << j;
  else
    rows_[i] &= ~(uint64_t{1} << j);
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (at(i, j)) out.emplace_back(i, j);
  return out;
}

int Relation::pairCount() const {
  int c = 0;
  for (int i = 0; i < size(); ++i) c += __builtin_popcountll(rows_[i]);
  return c;
}

std::vector<std::string> RelationClass::kinds() const {
  std::vector<std::string> out;
  if (isPreorder()) out.push_back("preorder");
  if (isPartialOrder()) out.push_back("partial-order");
  if (isLinearPreorder()) out.push_back("linear-preorder");
  if (isLinearOrder()) out.push_back("linear-order");
  if (isEquivalence()) out.push_back("equivalence");
  if (out.empty()) out.push_back("raw");
  return out;
}

RelationClass classify(const Relation& r) {
  const int n = r.size();
  RelationClass c;
  c.reflexive = true;
  c.transitive = true;
  c.antisymmetric = true;
  c.symmetric = true;
  c.total = true;
  for (int i = 0; i < n; ++i) {
    if (!r.at(i, i)) c.reflexive = false;
    for (int j = 0; j < n; ++j) {
      if (r.at(i, j) && !r.at(j, i)) c.symmetric = false;
      if (i != j) {
        if (r.at(i, j) && r.at(j, i)) c.antisymmetric = false;
        if (!r.at(i, j) && !r.at(j, i)) c.total = false;
      }
      if (!r.at(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (r.at(j, k) && !r.at(i, k)) c.transitive = false;
    }
  }
  return c;
}

Relation transitiveClosure(const Relation& r) {
  Relation out = r;
  const int n = r.size();
  for (int k = 0; k < n; ++k) {
    const uint64_t kRow = out.row(k);
    for (int i = 0; i < n; ++i)
      if (out.at(i, k))
        for (int j = 0; j < n; ++j)
          if ((kRow >> j) & 1u) out.set(i, j);
  }
  return out;
}

Relation strictPart(const Relation& r) {
  Relation out(r.universe());
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j)
      if (r.at(i, j) && !r.at(j, i)) out.set(i, j);
  return out;
}

bool extends(const Relation& sub, const Relation& super) {
  if (!(sub.universe() == super.universe())) return false;
  for (int i = 0; i < sub.size(); ++i)
    if (sub.row(i) & ~super.row(i)) return false;
  return true;
}

Relation intersect(const Relation& a, const Relation& b) {
  Relation out(a.universe());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.at(i, j) && b.at(i, j)) out.set(i, j);
  return out;
}

Relation unite(const Relation& a, const Relation& b) {
  Relation out = a;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (b.at(i, j)) out.set(i, j);
  return out;
}

namespace {

void requirePartialOrder(const Relation& r, const char* who) {
  RelationClass c = classify(r);
  if (!c.isPreorder())
    throw Error(ErrorKind::NotAPreorder, std::string(who) + ": relation is not a preorder");
  if (!c.antisymmetric)
    throw Error(ErrorKind::NotAPartialOrder,
                std::string(who) + ": relation is not antisymmetric");
}

Relation chainToRelation(const Universe& u, const std::vector<int>& chain) {
  Relation out(u);
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = i; j < chain.size(); ++j) out.set(chain[i], chain[j]);
  return out;
}

} // namespace

Relation topoLinearExtension(const Relation& r) {
  requirePartialOrder(r, "topoLinearExtension");
  const int n = r.size();
  std::vector<bool> placed(n, false);
  std::vector<int> chain;
  chain.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int x = 0; x < n && pick < 0; ++x) {
      if (placed[x]) continue;
      bool minimal = true;
      for (int y = 0; y < n; ++y)
        if (!placed[y] && y != x && r.at(y, x) && !r.at(x, y)) minimal = false;
      if (minimal) pick = x;
    }
    // a partial order always has a minimal element among the rest
    chain.push_back(pick);
    placed[pick] = true;
  }
  return chainToRelation(r.universe(), chain);
}

namespace {

void enumerateChains(const Relation& strict, std::vector<int>& chain,
                     std::vector<bool>& placed,
                     const std::function<void(const std::vector<int>&)>& emit) {
  const int n = strict.size();
  if (static_cast<int>(chain.size()) == n) {
    emit(chain);
    return;
  }
  for (int x = 0; x < n; ++x) {
    if (placed[x]) continue;
    bool ready = true;
    for (int y = 0; y < n; ++y)
      if (!placed[y] && strict.at(y, x)) ready = false;
    if (!ready) continue;
    placed[x] = true;
    chain.push_back(x);
    enumerateChains(strict, chain, placed, emit);
    chain.pop_back();
    placed[x] = false;
  }
}

} // namespace

void enumerateLinearExtensions(const Relation& r, const PermAction* invariantUnder,
                               const std::function<void(const Relation&)>& sink,
                               int cap) {
  requirePartialOrder(r, "enumerateLinearExtensions");
  if (r.size() > cap)
    throw Error(ErrorKind::CapExceeded,
                "enumerateLinearExtensions: universe size " + std::to_string(r.size()) +
                    " exceeds cap " + std::to_string(cap));
  if (invariantUnder && !compatibleUniverses(r.universe(), invariantUnder->universe()))
    throw Error(ErrorKind::UniverseMismatch,
                "enumerateLinearExtensions: relation and action universes differ");
  Relation strict = strictPart(r);
  std::vector<int> chain;
  std::vector<bool> placed(r.size(), false);
  enumerateChains(strict, chain, placed, [&](const std::vector<int>& c) {
    Relation lin = chainToRelation(r.universe(), c);
    if (invariantUnder && !isInvariant(lin, *invariantUnder).invariant) return;
    sink(lin);
  });
}

std::vector<Relation> allLinearExtensions(const Relation& r,
                                          const PermAction* invariantUnder, int cap) {
  std::vector<Relation> out;
  enumerateLinearExtensions(r, invariantUnder,
                            [&](const Relation& lin) { out.push_back(lin); }, cap);
  return out;
}

Relation hasseEdges(const Relation& r) {
  Relation s = strictPart(r);
  Relation out(r.universe());
  const int n = r.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!s.at(i, j)) continue;
      bool covered = false;
      for (int k = 0; k < n && !covered; ++k)
        if (k != i && k != j && s.at(i, k) && s.at(k, j)) covered = true;
      if (!covered) out.set(i, j);
    }
  return out;
}

namespace {

std::string dotQuote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

} // namespace

std::string hasseDot(const Relation& r, const std::string& name) {
  requirePartialOrder(r, "hasseDot");
  Relation h = hasseEdges(r);
  std::ostringstream os;
  os << "digraph " << dotQuote(name) << " {\n";
  os << "  rankdir=BT;\n";
  for (int i = 0; i < r.size(); ++i)
    os << "  n" << i << " [label=" << dotQuote(r.universe().label(i)) << "];\n";
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j)
      if (h.at(i, j)) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

Condensation condense(const Relation& preorder) {
  const int n = preorder.size();
  Condensation c;
  c.representative.assign(n, -1);
  c.classIndex.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (c.representative[i] >= 0) continue;
    c.representative[i] = i;
    c.classIndex[i] = static_cast<int>(c.classes.size());
    c.classes.push_back({i});
    for (int j = i + 1; j < n; ++j)
      if (c.representative[j] < 0 && preorder.at(i, j) && preorder.at(j, i)) {
        c.representative[j] = i;
        c.classIndex[j] = c.classIndex[i];
        c.classes.back().push_back(j);
      }
  }
  return c;
}

Relation condensedOrder(const Relation& preorder, const Condensation& c) {
  const int m = static_cast<int>(c.classes.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& cls : c.classes) labels.push_back(preorder.universe().label(cls[0]));
  Relation out(Universe(m, std::move(labels)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (preorder.at(c.classes[a][0], c.classes[b][0])) out.set(a, b);
  return out;
}

} // namespace invord
