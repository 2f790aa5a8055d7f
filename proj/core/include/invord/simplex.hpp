#pragma once

#include <vector>

#include "invord/rational.hpp"

namespace invord {

// Exact primal simplex with Bland's rule on dense rational tableaus.
// Sized for desk-scale polyhedra; termination is guaranteed, speed is not
// the point.

struct LpSolution {
  Rational value;
  RatVector x; // primal solution
  RatVector y; // dual values, one per constraint row
};

// max c.x  s.t.  A x <= b, x >= 0, with b >= 0 so the slack basis starts
// feasible. Throws std::logic_error if the objective is unbounded.
LpSolution solveBoundedMax(const RatMatrix& A, const RatVector& b, const RatVector& c);

struct FeasSolution {
  bool feasible;
  RatVector x; // when feasible: x >= 0 with E x = d
  RatVector y; // otherwise: y.E >= 0 (componentwise over columns), y.d < 0
};

// Finds x >= 0 with E x = d, or a Farkas certificate that none exists.
FeasSolution solveEqFeasibility(const RatMatrix& E, const RatVector& d);

} // namespace invord
