#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gyro/gyro.hpp"
#include "gyro/iso.hpp"

namespace gyro {

class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IsoSide {
  bool found = false;
  std::optional<Morphism> morphism;
  SearchStats stats;
};

// Structured outcome of one theorem-level check. predicate_side is the
// group-theoretic condition, brute_side the exhaustive gyrogroup-level
// scan; agreement is their equivalence plus any follow-up assertions the
// check performs. Witnesses are rendered with element names when the
// subject table has them.
struct TheoremReport {
  std::string check;
  std::vector<std::string> subjects;
  bool hypothesis_ok = true;
  std::optional<bool> predicate_side;
  std::optional<bool> brute_side;
  std::optional<bool> agreement;
  std::map<std::string, std::string> witnesses;
  std::optional<int> inn_exponent;                 // theorem2
  std::optional<IsoSide> group_iso, gyro_iso;      // theorem3, exploration
  std::optional<bool> gyro_iso_is_group_hom;       // theorem3
  std::optional<bool> proof_identities_ok;         // theorem3
  std::optional<std::size_t> aut_count_group, aut_count_gyro;  // corollary4
  std::optional<bool> odot_associative;            // table_flags
  std::optional<bool> nontrivial_gyration;         // table_flags
  std::string note;
  std::string error;
};

// (G,⊙) is a gyrogroup ⟺ G is central by a 2-Engel group.
// predicate_side = is_central_by_2_engel, brute_side = exhaustive axiom
// verification of the a²ba⁻¹ table.
TheoremReport check_theorem1(const Group& g, const std::string& name = "G");

// For G central by 2-Engel: (G,⊙) gyrocommutative ⟺ all cubes central
// ⟺ exponent(Inn(G)) divides 3. Records exponent(Inn(G)); notes the
// divides-3 reading when that exponent is 1. Throws HypothesisError when
// G is not central by a 2-Engel group.
TheoremReport check_theorem2(const Group& g, const std::string& name = "G");

// For both groups central by 2-Engel and 3∤|G1|: group isomorphism
// exists ⟺ gyro isomorphism exists, and any found gyro isomorphism is a
// group homomorphism satisfying the six derived identities.
TheoremReport check_theorem3(const Group& g1, const Group& g2,
                             const std::string& name1 = "G1",
                             const std::string& name2 = "G2");

// The six identities any gyro isomorphism f of associated tables
// satisfies, checked exhaustively over their quantifiers:
//   f(e)=e', f(a²)=f(a)², f(a⁻¹)=f(a)⁻¹, f(aba)=f(a)f(b)f(a),
//   f(a³b)=f(a)³f(b), f(a³)=f(a)³.
// No divisibility hypothesis. Throws PreconditionError when f is not a
// bijective homomorphism of the associated gyro tables.
TheoremReport check_proof_identities(const Morphism& f, const Group& g1, const Group& g2,
                                     const std::string& name1 = "G1",
                                     const std::string& name2 = "G2");

// For G central by 2-Engel and 3∤|G|: the automorphisms of the group
// table and of the gyro table coincide as sets of mappings.
TheoremReport check_corollary4(const Group& g, const std::string& name = "G");

// Every group homomorphism f: G1→G2 is a homomorphism of the associated
// gyro tables under the same map. Throws PreconditionError when f is not
// a group homomorphism; whether both groups satisfy the theorem-1
// hypothesis is recorded, not required.
TheoremReport check_functor(const Morphism& f, const Group& g1, const Group& g2,
                            const std::string& name1 = "G1",
                            const std::string& name2 = "G2");

// Batch input: either a group or the reason it could not be loaded.
struct ScreenItem {
  std::string name;
  std::optional<Group> group;
  std::string error;
};

struct ScreenOptions {
  int jobs = 1;          // worker threads; results are order-independent
  int max_order = 0;     // skip larger groups entirely (0 = no filter)
  int iso_cap = 128;     // per-table cap for pairwise searches
  int aut_cap = 64;      // per-table cap for automorphism enumeration
  bool pairs = true;     // run theorem3 / exploration over pairs
};

// Runs per-group table flags + theorem 1, theorem 2 and corollary 4
// where their hypotheses hold, theorem 3 over eligible pairs, and
// non-assertive exploration (gyro-iso search only reported) over pairs
// whose orders are both divisible by 3. Individual failures are embedded
// in their records; the batch never aborts. Output order is fixed by
// input order regardless of jobs.
std::vector<TheoremReport> screen(const std::vector<ScreenItem>& items,
                                  const ScreenOptions& options = {});

std::vector<TheoremReport> screen(const std::vector<NamedGroup>& groups,
                                  const ScreenOptions& options = {});

}  // namespace gyro
