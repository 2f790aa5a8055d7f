#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace invord {

enum class ErrorKind {
  MalformedInput,     // bad JSON, non-bijection map, out-of-range index
  CapExceeded,        // instance larger than a configured cap
  UniverseMismatch,   // relation and action live on different universes
  NotAPreorder,       // reflexivity or transitivity missing where required
  NotAPartialOrder,   // antisymmetry missing where required
  NotInvariant,       // relation fails G-invariance where required
  NonAbelian,         // generators do not commute and no override was given
  QuotientIllDefined, // generator does not respect the equivalence classes
  PrecedenceBlocked,  // extendStep called with y <=_G x
  ConeNotPointed,     // weight construction on a cone with a zero combination
  ConditionFailed,    // no-finite-orbit condition fails (witness attached)
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// A sequence of group-element indices h_1..h_m, each satisfying y <= h_i x,
// whose product is the identity. Witnesses y <=_G x.
struct SemigroupWitness {
  std::vector<int> elems;
};

class PrecedenceError : public Error {
public:
  PrecedenceError(std::string message, SemigroupWitness witness)
      : Error(ErrorKind::PrecedenceBlocked, std::move(message)),
        witness_(std::move(witness)) {}

  const SemigroupWitness& witness() const { return witness_; }

private:
  SemigroupWitness witness_;
};

} // namespace invord
