#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace invord {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

inline Rational dot(const RatVector& a, const std::vector<long long>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Canonical "p/q" rendering ("p" when q = 1).
std::string ratToString(const Rational& r);

// Parses "p", "-p", "p/q". Throws MalformedInput on anything else.
Rational ratFromString(const std::string& s);

} // namespace invord
