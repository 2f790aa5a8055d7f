#pragma once

#include <string>

#include "invord/action.hpp"
#include "invord/cone.hpp"
#include "invord/extension.hpp"
#include "invord/relation.hpp"

namespace invord {

// File formats. All parsers throw Error(MalformedInput) with a message
// naming the offending field; serializers emit deterministic, two-space
// indented JSON ending in a newline, so repeated runs are byte-identical.

// {"n": int, "labels": [str]?, "pairs": [[i,j],...], "reflexiveClose": bool?}
Relation parseRelation(const std::string& text, int maxN = limits::kDirectRelation);
std::string relationToJson(const Relation& r);

// {"n": int, "labels": [str]?,
//  "generators": [{"name": str, "map": [int,...]}], "allowNonabelian": bool?}
PermAction parseAction(const std::string& text);
std::string actionToJson(const PermAction& a);

// {"k": int, "gens": [[int,...],...]}
ConeOrder parseCone(const std::string& text);
std::string coneToJson(const ConeOrder& c);

std::string classToJson(const Universe& u, const RelationClass& cls);
std::string orbitsToJson(const PermAction& a, const EquivalenceClasses& classes);
std::string gordanToJson(const GordanCertificate& cert);
std::string membershipToJson(const MembershipCertificate& cert);
std::string monoidSearchToJson(const std::optional<MonoidCombo>& found, long long bound);
std::string weightOrderToJson(const WeightOrder& w);
std::string invarianceToJson(const PermAction& a, const InvarianceResult& res);
std::string strongInvarianceToJson(const PermAction& a, const StrongInvarianceResult& res);
std::string finiteOrbitWitnessToJson(const PermAction& a, const FiniteOrbitWitness& w);
std::string semigroupWitnessToJson(const PermAction& a, const SemigroupWitness& w);
std::string leqgQueryToJson(const PermAction& a, int x, int y,
                            const std::optional<SemigroupWitness>& w);
std::string conditionFailureToJson(const PermAction& a, const FiniteOrbitWitness& w);

std::string readFile(const std::string& path);

} // namespace invord
