#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gyro/group.hpp"
#include "gyro/predicates.hpp"

namespace gyro {

// One axiom violation found by verify_gyrogroup. axiom is one of
// "identity", "inverses", "gyr_bijective", "gyr_automorphism",
// "gyroassoc", "left_loop"; witness holds the first (lexicographic)
// violating elements for that axiom.
struct AxiomFailure {
  std::string axiom;
  std::vector<elem_t> witness;
};

struct AxiomReport {
  bool passed = true;
  std::vector<AxiomFailure> failures;
};

class NotBijectiveError : public std::runtime_error {
 public:
  NotBijectiveError(elem_t a_, elem_t b_)
      : std::runtime_error("gyration map is not bijective"), a(a_), b(b_) {}
  elem_t a, b;
};

class NotAGyrogroupError : public std::runtime_error {
 public:
  explicit NotAGyrogroupError(AxiomReport r)
      : std::runtime_error("table is not a gyrogroup"), report(std::move(r)) {}
  AxiomReport report;
};

// Gyration tables of order beyond this are computed on demand instead of
// being stored (storage is n² permutations of n points).
inline constexpr int kGyrPrecomputeThreshold = 512;

// Gyrogroup over {0..n-1}: the table, its two-sided identity and
// inverses, and the gyrations gyr[a,b] determined by the gyrator
// identity gyr[a,b](c) = (a⊙b)′⊙(a⊙(b⊙c)).
struct Gyrogroup {
  OpTable op;
  elem_t identity = 0;
  std::vector<elem_t> inverses;
  std::vector<Perm> gyr_table;  // n*n entries when precomputed, else empty

  int order() const { return op.n; }
  elem_t odot(elem_t a, elem_t b) const { return op.at(a, b); }
  elem_t inv(elem_t a) const { return inverses[a]; }

  Perm gyr(elem_t a, elem_t b) const;
  bool has_nontrivial_gyration() const;
};

// The table of a⊙b = a²ba⁻¹ over G. Always constructible; whether it is
// a gyrogroup is a separate question (verify_gyrogroup / Theorem 1).
OpTable associated_gyro(const Group& g);

// The gyrator-identity map c ↦ (a⊙b)′⊙(a⊙(b⊙c)) as a permutation.
// Requires e to be a two-sided identity of t and inv two-sided inverses
// (checked; std::invalid_argument otherwise). Throws NotBijectiveError
// when the map is not a bijection — the table is not a gyrogroup.
Perm gyration(const OpTable& t, elem_t e, const std::vector<elem_t>& inv, elem_t a,
              elem_t b);

// Exhaustive axiom check of an arbitrary table: unique two-sided
// identity, unique two-sided inverses, gyration maps bijective and
// automorphisms of t, left gyroassociativity, left loop property.
// Cheap checks run first; each axiom reports its first witness but all
// axioms are scanned. Throws GroupError(MalformedTable) for non-square
// input only; axiom failure is reported, not thrown.
AxiomReport verify_gyrogroup(const OpTable& t);

// Builds the gyrogroup associated to g, with gyrations precomputed up to
// the threshold. Throws NotAGyrogroupError carrying the axiom report if
// verify_gyrogroup fails. Also cross-checks gyr[a,b] = φ_{[a,b⁻¹]} on
// the way (std::logic_error if that ever failed).
Gyrogroup build_gyrogroup(const Group& g, int precompute_threshold = kGyrPrecomputeThreshold);

// ∀a,b: a⊙b = gyr[a,b](b⊙a); witness is the least violating (a,b).
PredicateResult is_gyrocommutative(const Gyrogroup& gg);

// ∀a,b: gyr[a,b] equals conjugation by [a,b⁻¹] in g, as permutations.
// Validates the commutator convention [x,y] = xyx⁻¹y⁻¹.
PredicateResult check_gyr_formula(const Group& g, const Gyrogroup& gg);

}  // namespace gyro
