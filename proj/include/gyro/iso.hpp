#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gyro/predicates.hpp"
#include "gyro/table.hpp"

namespace gyro {

// Mapping between two carriers; map[a] is the image of a.
struct Morphism {
  std::vector<elem_t> map;
  int codomain_size = 0;

  int domain_size() const { return static_cast<int>(map.size()); }
  bool is_bijective() const { return is_bijection(map, codomain_size); }

  auto operator<=>(const Morphism&) const = default;
};

struct SearchStats {
  std::uint64_t nodes = 0;   // candidate assignments tried
  std::uint64_t prunes = 0;  // assignments rejected by a constraint
  double elapsed_seconds = 0;
};

// Relabeling-invariant signatures: elem_sig[a] digests the left-power
// period of a together with iteratively refined row/column profiles;
// table_sig digests the multiset of element signatures. Isomorphic
// tables always produce equal signatures, so unequal table_sig proves
// non-isomorphism and candidate images can be restricted to equal
// elem_sig.
struct Fingerprint {
  std::vector<std::uint64_t> elem_sig;
  std::uint64_t table_sig = 0;
};

Fingerprint fingerprint(const OpTable& t);

class SizeMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ∀a,b: f(a∘b) = f(a)∘f(b); witness is the least violating (a,b).
// Throws SizeMismatchError when f does not fit A and B.
PredicateResult is_homomorphism(const Morphism& f, const OpTable& A, const OpTable& B);

struct IsoResult {
  std::optional<Morphism> morphism;
  SearchStats stats;
};

struct AutResult {
  std::vector<Morphism> automorphisms;
  SearchStats stats;
};

// Backtracking isomorphism search over arbitrary finite magmas.
// Branches on the smallest unassigned element, tries candidate images in
// increasing order, and propagates partial products, so the first
// solution found is the lexicographically least by image sequence.
// Candidates are restricted to equal per-element fingerprints; a
// two-sided identity, when both tables have one, is mapped upfront.
// Absence of an isomorphism is a regular result, not an error.
IsoResult find_isomorphism(const OpTable& A, const OpTable& B);

// All isomorphisms A→A in lexicographic order. The returned list is
// checked post hoc to be closed under composition and inverse
// (std::logic_error if not — an engine bug).
AutResult enumerate_automorphisms(const OpTable& A);

}  // namespace gyro
