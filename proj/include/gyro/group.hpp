#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gyro/table.hpp"

namespace gyro {

class GroupError : public std::runtime_error {
 public:
  enum class Kind { MalformedTable, NoIdentity, NoInverse, NotAssociative };

  GroupError(Kind k, const std::string& msg, std::vector<elem_t> w = {})
      : std::runtime_error(msg), kind(k), witness(std::move(w)) {}

  Kind kind;
  std::vector<elem_t> witness;
};

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validated finite group over {0..n-1}. The identity is wherever the
// table puts it; presets happen to use index 0, ingested tables need not.
struct Group {
  OpTable op;
  elem_t identity = 0;
  std::vector<elem_t> inverses;

  int order() const { return op.n; }
  elem_t mul(elem_t a, elem_t b) const { return op.at(a, b); }
  elem_t inv(elem_t a) const { return inverses[a]; }
  std::string name_of(elem_t x) const { return op.name_of(x); }
};

struct NamedGroup {
  std::string name;
  Group group;
};

// Checks the group axioms on t and locates identity and inverses.
// Throws GroupError carrying a witness on failure:
//   NoIdentity, NoInverse(a), NotAssociative(a,b,c), MalformedTable.
Group validate_group(const OpTable& t);

// {z : za = az for all a}, ascending. Always contains the identity.
std::vector<elem_t> center(const Group& g);

bool is_central(const Group& g, elem_t z);

// [a,b] = a·b·a⁻¹·b⁻¹.
elem_t commutator(const Group& g, elem_t a, elem_t b);

// Least k >= 1 with a^k = e.
int element_order(const Group& g, elem_t a);

// a^k for any integer k; a^0 = e, negative k goes through the inverse.
// Repeated squaring on |k|.
elem_t power(const Group& g, elem_t a, long long k);

// Inner automorphism c -> g·c·g⁻¹ as a permutation of the carrier.
Perm conjugation_aut(const Group& g, elem_t x);

// Inn(G): the group of distinct conjugation permutations under
// composition. Canonical numbering: the identity permutation is element
// 0, the rest appear in increasing order of their least inducing
// element. |Inn(G)| = |G| / |Z(G)|.
Group inner_group(const Group& g);

// lcm of all element orders.
int exponent(const Group& g);

// Subgroup of Sym(m) generated by gens, materialized as a Cayley table.
// Elements are numbered in breadth-first discovery order from the
// identity, right-multiplying by the generators in the order given.
// Element names are cycle strings. An empty generating set yields the
// trivial group of order 1. Throws CapExceededError once more than cap
// elements are discovered, InvalidPermutationError for non-bijective or
// mixed-degree generators.
Group closure_from_permutations(const std::vector<Perm>& gens, int cap);

}  // namespace gyro
