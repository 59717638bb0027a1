#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gyro/group.hpp"

namespace gyro {

class BadParametersError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
  int line, col;
};

class DimensionMismatchError : public std::runtime_error {
 public:
  DimensionMismatchError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
  int line;
};

// Built-in constructor request. Names: cyclic(n), elementary_abelian(p,k),
// direct_product(n1,...,nk) of cyclic factors, dihedral(n) of order 2n,
// dicyclic(m) of order 4m (m=2 is Q8), heisenberg(p) of order p³,
// symmetric(k), alternating(k).
struct Preset {
  std::string name;
  std::vector<int> parameters;
};

// Largest carrier a constructor or parser will produce.
inline constexpr int kMaxOrder = 4096;

// "name:a,b,c" → Preset. Throws BadParametersError on unknown names or
// malformed argument lists.
Preset parse_preset_spec(const std::string& spec);

// Canonical numbering per preset:
//   cyclic(n): i = gⁱ.
//   elementary_abelian(p,k), direct_product(...): tuple-lexicographic.
//   dihedral(n): 0..n-1 = rⁱ, n..2n-1 = rⁱs, with s·r·s = r⁻¹.
//   dicyclic(m): ±aᵗ pairs first, then the ±aᵗb pairs; m=2 comes out as
//     Q8 ordered [1,-1,i,-i,j,-j,k,-k].
//   heisenberg(p): triples (a,b,c) lexicographic with product
//     (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab') mod p — unitriangular
//     3×3 matrices with superdiagonal a,b and corner c.
//   symmetric(k)/alternating(k): permutations in lexicographic image
//     order, composition applying the right factor first.
// Throws BadParametersError for invalid parameters or orders beyond
// kMaxOrder. Every result passes validate_group.
Group build_preset(const Preset& p);

Group build_preset(const std::string& spec);

// Direct product with pair-lexicographic numbering: (a,b) ↦ a·|B| + b.
Group direct_product(const Group& a, const Group& b);

// Text Cayley format: first line n; then n lines of n space-separated
// 0-based ids, row a column b holding a∘b; optional trailing line
// "# names: x,y,z". ASCII, LF, no trailing spaces. A JSON variant
// {"n":..,"table":[[..]],"names":[..]} is accepted wherever a table is
// read (detected by a leading '{').
OpTable parse_table(const std::string& text);

enum class TableFormat { text, structured };

std::string serialize_table(const OpTable& t, TableFormat format = TableFormat::text);

// One permutation per line in image notation "m: i0 i1 ... i(m-1)".
// All lines must share the same degree.
std::vector<Perm> parse_generators(const std::string& text);

// The standard small-group catalog used by screen --builtin and the
// acceptance checks: cyclic 1..16, elementary abelian 2³ and 3², Z4×Z2,
// dihedral 2..8, dicyclic 2..4, heisenberg(3), symmetric 3 and 4,
// alternating 4, and three further direct products (Z6×Z2, D4×Z2,
// Q8×Z3). max_order 0 means no filter.
std::vector<NamedGroup> builtin_catalog(int max_order = 0);

}  // namespace gyro
