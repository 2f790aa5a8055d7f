#include "cli.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "invord/extension.hpp"
#include "invord/json_io.hpp"

namespace invord::cli {

namespace {

struct Options {
  std::string actionPath;
  std::string relationPath;
  std::string conePath;
  std::string pair;
  long long bound = 0;
  bool summary = false;
  bool dot = false;
};

int exitCodeFor(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::MalformedInput:
    case ErrorKind::CapExceeded:
    case ErrorKind::UniverseMismatch:
      return 2;
    default:
      return 1;
  }
}

const char* kindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::UniverseMismatch: return "universe-mismatch";
    case ErrorKind::NotAPreorder: return "not-a-preorder";
    case ErrorKind::NotAPartialOrder: return "not-a-partial-order";
    case ErrorKind::NotInvariant: return "not-invariant";
    case ErrorKind::NonAbelian: return "non-abelian";
    case ErrorKind::QuotientIllDefined: return "quotient-ill-defined";
    case ErrorKind::PrecedenceBlocked: return "precedence-blocked";
    case ErrorKind::ConeNotPointed: return "cone-not-pointed";
    case ErrorKind::ConditionFailed: return "condition-failed";
  }
  return "error";
}

PermAction loadAction(const Options& opt) {
  if (opt.actionPath.empty())
    throw Error(ErrorKind::MalformedInput, "--action FILE is required");
  return parseAction(readFile(opt.actionPath));
}

Relation loadRelation(const Options& opt, const PermAction* a) {
  if (opt.relationPath.empty())
    throw Error(ErrorKind::MalformedInput, "--relation FILE is required");
  // the hard cap here lets emitted powerset relations round-trip
  Relation r = parseRelation(readFile(opt.relationPath), limits::kUniverseHard);
  if (a) {
    Universe merged = mergeUniverses(r.universe(), a->universe());
    if (!(merged == r.universe())) {
      Relation relabeled(merged);
      for (auto [i, j] : r.pairs()) relabeled.set(i, j);
      return relabeled;
    }
  }
  return r;
}

ConeOrder loadCone(const Options& opt) {
  if (opt.conePath.empty())
    throw Error(ErrorKind::MalformedInput, "--cone FILE is required");
  return parseCone(readFile(opt.conePath));
}

std::vector<long long> parseVector(const std::string& text) {
  std::vector<long long> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedInput, "bad vector component '" + tok + "'");
    }
  }
  if (out.empty())
    throw Error(ErrorKind::MalformedInput, "empty vector in --pair");
  return out;
}

std::pair<IntVector, IntVector> parseVectorPair(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::MalformedInput,
                "--pair wants two vectors 'x1,..,xk:y1,..,yk'");
  return {parseVector(text.substr(0, colon)), parseVector(text.substr(colon + 1))};
}

std::pair<int, int> parseIndexPair(const std::string& text, const Universe& u) {
  IntVector v = parseVector(text);
  if (v.size() != 2)
    throw Error(ErrorKind::MalformedInput, "--pair wants two indices 'i,j'");
  for (long long x : v)
    if (x < 0 || x >= u.size())
      throw Error(ErrorKind::MalformedInput, "--pair index out of range");
  return {static_cast<int>(v[0]), static_cast<int>(v[1])};
}

std::string classesSummary(const Relation& equivalence) {
  Condensation c = condense(equivalence);
  std::ostringstream os;
  for (size_t k = 0; k < c.classes.size(); ++k) {
    if (k) os << "  ";
    for (size_t j = 0; j < c.classes[k].size(); ++j) {
      if (j) os << "~";
      os << equivalence.universe().label(c.classes[k][j]);
    }
  }
  return os.str();
}

void emitRelation(const Relation& r, const Options& opt, std::ostream& out) {
  if (opt.dot)
    out << hasseDot(r);
  else if (opt.summary)
    out << chainSummary(r) << "\n";
  else
    out << relationToJson(r);
}

int cmdCheck(const Options& opt, std::ostream& out) {
  Relation r = loadRelation(opt, nullptr);
  out << classToJson(r.universe(), classify(r));
  return 0;
}

int cmdOrbits(const Options& opt, std::ostream& out) {
  PermAction a = loadAction(opt);
  out << orbitsToJson(a, orbits(a));
  return 0;
}

int cmdSimg(const Options& opt, std::ostream& out) {
  PermAction a = loadAction(opt);
  Relation sim = simG(a);
  if (opt.summary)
    out << classesSummary(sim) << "\n";
  else
    out << relationToJson(sim);
  return 0;
}

int cmdLeqg(const Options& opt, std::ostream& out) {
  PermAction a = loadAction(opt);
  Relation leq = loadRelation(opt, &a);
  Relation lg = leqG(a, leq);
  if (!opt.pair.empty()) {
    auto [x, y] = parseIndexPair(opt.pair, leq.universe());
    out << leqgQueryToJson(a, x, y, leqGWitness(a, leq, x, y));
    return 0;
  }
  emitRelation(lg, opt, out);
  return 0;
}

int cmdExtendLinear(const Options& opt, std::ostream& out) {
  PermAction a = loadAction(opt);
  Relation leq = loadRelation(opt, &a);
  auto result = invariantLinearExtension(a, leq);
  if (const auto* witness = std::get_if<FiniteOrbitWitness>(&result)) {
    out << conditionFailureToJson(a, *witness);
    return 1;
  }
  emitRelation(std::get<Relation>(result), opt, out);
  return 0;
}

int cmdExtendPreorder(const Options& opt, std::ostream& out) {
  PermAction a = loadAction(opt);
  Relation leq = loadRelation(opt, &a);
  emitRelation(invariantLinearPreorderExtension(a, leq), opt, out);
  return 0;
}

int cmdPowersetOrder(const Options& opt, std::ostream& out) {
  PermAction a = loadAction(opt);
  PowersetPreorder p = powersetPreorder(a);
  emitRelation(p.order, opt, out);
  return 0;
}

int cmdStrongInvariance(const Options& opt, std::ostream& out) {
  PermAction a = loadAction(opt);
  Relation r = loadRelation(opt, &a);
  StrongInvarianceResult res = isStronglyInvariant(r, a);
  out << strongInvarianceToJson(a, res);
  return res.holds ? 0 : 1;
}

int cmdConeCheck(const Options& opt, std::ostream& out) {
  ConeOrder c = loadCone(opt);
  GordanCertificate cert = gordanCertificate(c);
  out << gordanToJson(cert);
  return std::holds_alternative<PositiveWeight>(cert) ? 0 : 1;
}

int cmdConeMember(const Options& opt, std::ostream& out) {
  ConeOrder c = loadCone(opt);
  if (opt.pair.empty())
    throw Error(ErrorKind::MalformedInput, "--pair 'x1,..,xk:y1,..,yk' is required");
  auto [x, y] = parseVectorPair(opt.pair);
  if (static_cast<int>(x.size()) != c.dim() || static_cast<int>(y.size()) != c.dim())
    throw Error(ErrorKind::MalformedInput, "--pair vectors must have dimension k");
  IntVector d(c.dim());
  for (int j = 0; j < c.dim(); ++j) d[j] = y[j] - x[j];
  if (opt.bound > 0) {
    auto found = monoidMemberBounded(c, d, opt.bound);
    out << monoidSearchToJson(found, opt.bound);
    return found ? 0 : 1;
  }
  MembershipCertificate cert = coneMember(c, d);
  out << membershipToJson(cert);
  return std::holds_alternative<Combo>(cert) ? 0 : 1;
}

int cmdConeExtend(const Options& opt, std::ostream& out) {
  ConeOrder c = loadCone(opt);
  out << weightOrderToJson(weightExtension(c));
  return 0;
}

int cmdConeSeparate(const Options& opt, std::ostream& out) {
  ConeOrder c = loadCone(opt);
  if (opt.pair.empty())
    throw Error(ErrorKind::MalformedInput, "--pair 'x1,..,xk:y1,..,yk' is required");
  auto [x, y] = parseVectorPair(opt.pair);
  out << weightOrderToJson(separatingExtension(c, x, y));
  return 0;
}

int cmdExportDot(const Options& opt, std::ostream& out) {
  Relation r = loadRelation(opt, nullptr);
  out << hasseDot(r);
  return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariant order extensions over finite group actions"};
  app.require_subcommand(1);

  Options opt;
  std::function<int(const Options&, std::ostream&)> handler;

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--action", opt.actionPath, "action JSON file");
    sub->add_option("--relation", opt.relationPath, "relation JSON file");
    sub->add_option("--cone", opt.conePath, "cone JSON file");
    sub->add_option("--pair", opt.pair, "element pair 'i,j' or vectors 'x1,..:y1,..'");
    sub->add_option("--bound", opt.bound, "coefficient bound for the monoid search");
    sub->add_flag("--summary", opt.summary, "chain summary instead of JSON");
    sub->add_flag("--dot", opt.dot, "Hasse diagram DOT instead of JSON");
  };

  struct Cmd {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  const Cmd cmds[] = {
      {"check", "classify a relation", cmdCheck},
      {"orbits", "orbit partition of an action", cmdOrbits},
      {"simg", "the relation ~G of an action", cmdSimg},
      {"leqg", "the closure <=_G of an invariant order", cmdLeqg},
      {"extend-linear", "invariant linear extension", cmdExtendLinear},
      {"extend-preorder", "invariant linear preorder extension", cmdExtendPreorder},
      {"powerset-order", "invariant linear preorder on the powerset", cmdPowersetOrder},
      {"strong-invariance", "strong invariance check", cmdStrongInvariance},
      {"cone-check", "Gordan certificate for a cone order", cmdConeCheck},
      {"cone-member", "rational cone membership / bounded monoid search", cmdConeMember},
      {"cone-extend", "weight-matrix linear extension of a cone order", cmdConeExtend},
      {"cone-separate", "weight-matrix extension separating a pair", cmdConeSeparate},
      {"export-dot", "Hasse diagram of a partial order", cmdExportDot},
  };
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    addCommon(sub);
    auto fn = c.fn;
    sub->callback([&handler, fn]() { handler = fn; });
  }

  std::vector<const char*> argv{"invord"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return handler(opt, out);
  } catch (const PrecedenceError& e) {
    err << "error (" << kindName(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const ConeNotPointedError& e) {
    out << gordanToJson(GordanCertificate{e.combo()});
    err << "error (" << kindName(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const SeparationBlockedError& e) {
    out << membershipToJson(MembershipCertificate{e.combo()});
    err << "error (" << kindName(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error (" << kindName(e.kind()) << "): " << e.what() << "\n";
    return exitCodeFor(e);
  }
}

} // namespace invord::cli
