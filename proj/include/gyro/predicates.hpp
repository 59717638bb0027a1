#pragma once

#include <vector>

#include "gyro/group.hpp"

namespace gyro {

// Outcome of an exhaustive condition scan. witness is empty iff holds,
// otherwise it is the lexicographically least violating tuple.
struct PredicateResult {
  bool holds = true;
  std::vector<elem_t> witness;
};

// ∀x,y: [[x,y],y] = e.
PredicateResult is_2_engel(const Group& g);

// ∀x,y: [[x,y],y] ∈ Z(G), i.e. G/Z(G) is 2-Engel. Element-wise form of
// "central by a 2-Engel group"; avoids building quotient tables.
PredicateResult is_central_by_2_engel(const Group& g);

// ∀b: b³ ∈ Z(G). Equivalent to exponent(Inn(G)) dividing 3.
PredicateResult cubes_central(const Group& g);

}  // namespace gyro
