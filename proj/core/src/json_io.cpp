#include "invord/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace invord {

using Json = nlohmann::ordered_json;

std::string ratToString(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rational ratFromString(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::MalformedInput, "zero denominator");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedInput, "cannot parse rational '" + s + "'");
  }
}

namespace {

Json parseText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

int getInt(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw Error(ErrorKind::MalformedInput,
                std::string("missing or non-integer field \"") + field + "\"");
  return j[field].get<int>();
}

Universe universeFromJson(const Json& j, int maxN) {
  int n = getInt(j, "n");
  if (n < 1)
    throw Error(ErrorKind::MalformedInput, "\"n\" must be >= 1");
  if (n > maxN)
    throw Error(ErrorKind::CapExceeded,
                "\"n\" = " + std::to_string(n) + " exceeds cap " + std::to_string(maxN));
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw Error(ErrorKind::MalformedInput, "\"labels\" must be an array");
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
      if (!l.is_string())
        throw Error(ErrorKind::MalformedInput, "\"labels\" entries must be strings");
      labels.push_back(l.get<std::string>());
    }
    return Universe(n, std::move(labels));
  }
  return Universe(n);
}

std::string dumped(const Json& j) { return j.dump(2) + "\n"; }

Json universeJson(const Universe& u) {
  Json j;
  j["n"] = u.size();
  if (!u.hasDefaultLabels()) j["labels"] = u.labels();
  return j;
}

Json elemJson(const PermAction& a, int index) {
  const GroupElem& e = a.element(index);
  Json word = Json::array();
  for (int gi : e.word) word.push_back(a.generators()[gi].name);
  return Json{{"word", word}, {"map", e.perm.map()}};
}

} // namespace

Relation parseRelation(const std::string& text, int maxN) {
  Json j = parseText(text);
  Universe u = universeFromJson(j, maxN);
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("pairs")) {
    if (!j["pairs"].is_array())
      throw Error(ErrorKind::MalformedInput, "\"pairs\" must be an array");
    for (const auto& p : j["pairs"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
          !p[1].is_number_integer())
        throw Error(ErrorKind::MalformedInput, "each pair must be [i, j]");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
  }
  bool reflexiveClose = false;
  if (j.contains("reflexiveClose")) {
    if (!j["reflexiveClose"].is_boolean())
      throw Error(ErrorKind::MalformedInput, "\"reflexiveClose\" must be a boolean");
    reflexiveClose = j["reflexiveClose"].get<bool>();
  }
  return Relation::fromPairs(std::move(u), pairs, reflexiveClose);
}

std::string relationToJson(const Relation& r) {
  Json j = universeJson(r.universe());
  Json pairs = Json::array();
  for (auto [i, k] : r.pairs()) pairs.push_back(Json::array({i, k}));
  j["pairs"] = std::move(pairs);
  return dumped(j);
}

PermAction parseAction(const std::string& text) {
  Json j = parseText(text);
  Universe u = universeFromJson(j, limits::kUniverseHard);
  if (!j.contains("generators") || !j["generators"].is_array())
    throw Error(ErrorKind::MalformedInput, "missing \"generators\" array");
  std::vector<NamedGenerator> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string() ||
        !g.contains("map") || !g["map"].is_array())
      throw Error(ErrorKind::MalformedInput,
                  "each generator must be {\"name\": str, \"map\": [int,...]}");
    std::vector<int> map;
    for (const auto& v : g["map"]) {
      if (!v.is_number_integer())
        throw Error(ErrorKind::MalformedInput, "generator map entries must be integers");
      map.push_back(v.get<int>());
    }
    if (static_cast<int>(map.size()) != u.size())
      throw Error(ErrorKind::MalformedInput,
                  "generator map length does not match \"n\"");
    gens.push_back({g["name"].get<std::string>(), Permutation(std::move(map))});
  }
  bool allowNonabelian = false;
  if (j.contains("allowNonabelian")) {
    if (!j["allowNonabelian"].is_boolean())
      throw Error(ErrorKind::MalformedInput, "\"allowNonabelian\" must be a boolean");
    allowNonabelian = j["allowNonabelian"].get<bool>();
  }
  return generateGroup(std::move(u), std::move(gens), allowNonabelian);
}

std::string actionToJson(const PermAction& a) {
  Json j = universeJson(a.universe());
  Json gens = Json::array();
  for (const auto& g : a.generators())
    gens.push_back(Json{{"name", g.name}, {"map", g.perm.map()}});
  j["generators"] = std::move(gens);
  if (!a.abelian()) j["allowNonabelian"] = true;
  return dumped(j);
}

ConeOrder parseCone(const std::string& text) {
  Json j = parseText(text);
  int k = getInt(j, "k");
  if (!j.contains("gens") || !j["gens"].is_array())
    throw Error(ErrorKind::MalformedInput, "missing \"gens\" array");
  std::vector<IntVector> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_array())
      throw Error(ErrorKind::MalformedInput, "each generator must be an integer array");
    IntVector v;
    for (const auto& e : g) {
      if (!e.is_number_integer())
        throw Error(ErrorKind::MalformedInput, "generator entries must be integers");
      v.push_back(e.get<long long>());
    }
    gens.push_back(std::move(v));
  }
  return ConeOrder(k, std::move(gens));
}

std::string coneToJson(const ConeOrder& c) {
  Json j;
  j["k"] = c.dim();
  Json gens = Json::array();
  for (const auto& g : c.gens()) gens.push_back(g);
  j["gens"] = std::move(gens);
  return dumped(j);
}

std::string classToJson(const Universe& u, const RelationClass& cls) {
  Json j;
  j["n"] = u.size();
  j["reflexive"] = cls.reflexive;
  j["transitive"] = cls.transitive;
  j["antisymmetric"] = cls.antisymmetric;
  j["symmetric"] = cls.symmetric;
  j["total"] = cls.total;
  j["kinds"] = cls.kinds();
  return dumped(j);
}

std::string orbitsToJson(const PermAction& a, const EquivalenceClasses& classes) {
  Json j;
  j["classes"] = classes.classes;
  j["representatives"] = classes.representative;
  Json labels = Json::array();
  for (const auto& cls : classes.classes) {
    Json names = Json::array();
    for (int x : cls) names.push_back(a.universe().label(x));
    labels.push_back(std::move(names));
  }
  j["classLabels"] = std::move(labels);
  return dumped(j);
}

namespace {

Json ratVecJson(const RatVector& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(ratToString(r));
  return out;
}

} // namespace

std::string gordanToJson(const GordanCertificate& cert) {
  Json j;
  if (const auto* pw = std::get_if<PositiveWeight>(&cert)) {
    j["type"] = "positive-weight";
    j["weight"] = ratVecJson(pw->w);
  } else {
    const auto& zc = std::get<ZeroCombo>(cert);
    j["type"] = "zero-combo";
    Json coeffs = Json::array();
    for (const auto& c : zc.coeffs) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
  }
  return dumped(j);
}

std::string membershipToJson(const MembershipCertificate& cert) {
  Json j;
  if (const auto* combo = std::get_if<Combo>(&cert)) {
    j["type"] = "combo";
    j["coeffs"] = ratVecJson(combo->coeffs);
  } else {
    j["type"] = "separating-weight";
    j["weight"] = ratVecJson(std::get<SeparatingWeight>(cert).w);
  }
  return dumped(j);
}

std::string monoidSearchToJson(const std::optional<MonoidCombo>& found, long long bound) {
  Json j;
  j["found"] = found.has_value();
  j["bound"] = bound;
  if (found) j["coeffs"] = found->coeffs;
  return dumped(j);
}

std::string weightOrderToJson(const WeightOrder& w) {
  Json j;
  j["k"] = w.dim();
  Json rows = Json::array();
  for (const auto& row : w.rows()) rows.push_back(ratVecJson(row));
  j["rows"] = std::move(rows);
  return dumped(j);
}

std::string invarianceToJson(const PermAction& a, const InvarianceResult& res) {
  Json j;
  j["invariant"] = res.invariant;
  if (res.witness) {
    j["witness"] = Json{{"generator", a.generators()[res.witness->generator].name},
                        {"x", res.witness->x},
                        {"y", res.witness->y}};
  }
  return dumped(j);
}

std::string strongInvarianceToJson(const PermAction& a,
                                   const StrongInvarianceResult& res) {
  Json j;
  j["stronglyInvariant"] = res.holds;
  if (res.witness) {
    j["witness"] = Json{{"element", elemJson(a, res.witness->element)},
                        {"x", res.witness->x},
                        {"y", res.witness->y},
                        {"side", res.witness->leftSide ? "gx<=y" : "x<=gy"}};
  }
  return dumped(j);
}

std::string finiteOrbitWitnessToJson(const PermAction& a, const FiniteOrbitWitness& w) {
  Json j;
  j["element"] = elemJson(a, w.element);
  j["orbit"] = w.orbit;
  return dumped(j);
}

std::string semigroupWitnessToJson(const PermAction& a, const SemigroupWitness& w) {
  Json j;
  Json seq = Json::array();
  for (int e : w.elems) seq.push_back(elemJson(a, e));
  j["sequence"] = std::move(seq);
  return dumped(j);
}

std::string leqgQueryToJson(const PermAction& a, int x, int y,
                            const std::optional<SemigroupWitness>& w) {
  Json j;
  j["pair"] = Json::array({x, y});
  j["holds"] = w.has_value();
  if (w) {
    Json seq = Json::array();
    for (int e : w->elems) seq.push_back(elemJson(a, e));
    j["witness"] = Json{{"sequence", std::move(seq)}};
  }
  return dumped(j);
}

std::string conditionFailureToJson(const PermAction& a, const FiniteOrbitWitness& w) {
  Json j;
  j["error"] = "condition-failed";
  j["witness"] = Json{{"element", elemJson(a, w.element)}, {"orbit", w.orbit}};
  return dumped(j);
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::MalformedInput, "cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace invord
