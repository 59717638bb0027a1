#include "gyro/group.hpp"

#include <map>
#include <numeric>
#include <string>

namespace gyro {

namespace {

std::string elem_list(const std::vector<elem_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

// Cycle string of a permutation, "e" for the identity.
std::string cycle_string(const Perm& p) {
  if (p.is_identity()) return "e";
  std::string s;
  std::vector<char> done(p.degree(), 0);
  for (elem_t i = 0; i < p.degree(); ++i) {
    if (done[i] || p(i) == i) continue;
    s += '(';
    elem_t j = i;
    bool first = true;
    do {
      if (!first) s += ' ';
      s += std::to_string(j);
      done[j] = 1;
      j = p(j);
      first = false;
    } while (j != i);
    s += ')';
  }
  return s;
}

}  // namespace

Group validate_group(const OpTable& t) {
  if (!t.well_formed())
    throw GroupError(GroupError::Kind::MalformedTable, "malformed table");

  elem_t e = find_identity(t);
  if (e < 0)
    throw GroupError(GroupError::Kind::NoIdentity, "no two-sided identity");

  std::vector<elem_t> inv(t.n, -1);
  for (elem_t a = 0; a < t.n; ++a) {
    for (elem_t x = 0; x < t.n; ++x) {
      if (t.at(x, a) == e && t.at(a, x) == e) {
        inv[a] = x;
        break;
      }
    }
    if (inv[a] < 0)
      throw GroupError(GroupError::Kind::NoInverse,
                       "element " + t.name_of(a) + " has no two-sided inverse", {a});
  }

  for (elem_t a = 0; a < t.n; ++a)
    for (elem_t b = 0; b < t.n; ++b)
      for (elem_t c = 0; c < t.n; ++c)
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c)))
          throw GroupError(GroupError::Kind::NotAssociative,
                           "not associative at " + elem_list({a, b, c}), {a, b, c});

  // Implied by the axioms; asserted independently.
  if (!is_latin_square(t))
    throw GroupError(GroupError::Kind::MalformedTable, "table is not a Latin square");

  return Group{t, e, std::move(inv)};
}

bool is_central(const Group& g, elem_t z) {
  for (elem_t a = 0; a < g.order(); ++a)
    if (g.mul(z, a) != g.mul(a, z)) return false;
  return true;
}

std::vector<elem_t> center(const Group& g) {
  std::vector<elem_t> z;
  for (elem_t c = 0; c < g.order(); ++c)
    if (is_central(g, c)) z.push_back(c);
  return z;
}

elem_t commutator(const Group& g, elem_t a, elem_t b) {
  return g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b));
}

int element_order(const Group& g, elem_t a) {
  int k = 1;
  elem_t x = a;
  while (x != g.identity) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

elem_t power(const Group& g, elem_t a, long long k) {
  elem_t base = a;
  if (k < 0) {
    base = g.inv(a);
    k = -k;
  }
  elem_t acc = g.identity;
  while (k > 0) {
    if (k & 1) acc = g.mul(acc, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return acc;
}

Perm conjugation_aut(const Group& g, elem_t x) {
  Perm p;
  p.image.resize(g.order());
  elem_t xi = g.inv(x);
  for (elem_t c = 0; c < g.order(); ++c) p.image[c] = g.mul(g.mul(x, c), xi);
  return p;
}

Group inner_group(const Group& g) {
  std::vector<Perm> perms;
  std::map<Perm, elem_t> index;
  Perm id = Perm::identity(g.order());
  perms.push_back(id);
  index.emplace(id, 0);
  for (elem_t x = 0; x < g.order(); ++x) {
    Perm p = conjugation_aut(g, x);
    if (index.emplace(p, static_cast<elem_t>(perms.size())).second)
      perms.push_back(std::move(p));
  }

  int n = static_cast<int>(perms.size());
  OpTable t;
  t.n = n;
  t.cells.resize(static_cast<std::size_t>(n) * n);
  for (elem_t i = 0; i < n; ++i)
    for (elem_t j = 0; j < n; ++j) {
      auto it = index.find(perms[i] * perms[j]);
      if (it == index.end())
        throw GroupError(GroupError::Kind::MalformedTable,
                         "conjugation permutations not closed");  // unreachable
      t.at(i, j) = it->second;
    }
  return validate_group(t);
}

int exponent(const Group& g) {
  long long ex = 1;
  for (elem_t a = 0; a < g.order(); ++a)
    ex = std::lcm(ex, static_cast<long long>(element_order(g, a)));
  return static_cast<int>(ex);
}

Group closure_from_permutations(const std::vector<Perm>& gens, int cap) {
  if (cap < 1) throw CapExceededError("cap must be at least 1");

  int degree = gens.empty() ? 1 : gens.front().degree();
  for (const Perm& p : gens) {
    if (p.degree() != degree)
      throw InvalidPermutationError("generators act on different point counts");
    if (!is_bijection(p.image, degree))
      throw InvalidPermutationError("generator is not a permutation");
  }

  std::vector<Perm> elems;
  std::map<Perm, elem_t> index;
  Perm id = Perm::identity(degree);
  elems.push_back(id);
  index.emplace(id, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    Perm current = elems[head];  // copy: elems may reallocate below
    for (const Perm& gen : gens) {
      Perm next = current * gen;
      if (index.emplace(next, static_cast<elem_t>(elems.size())).second) {
        if (static_cast<int>(elems.size()) >= cap)
          throw CapExceededError("closure exceeds cap of " + std::to_string(cap));
        elems.push_back(std::move(next));
      }
    }
  }

  int n = static_cast<int>(elems.size());
  OpTable t;
  t.n = n;
  t.cells.resize(static_cast<std::size_t>(n) * n);
  t.names.resize(n);
  for (elem_t i = 0; i < n; ++i) t.names[i] = cycle_string(elems[i]);
  for (elem_t i = 0; i < n; ++i)
    for (elem_t j = 0; j < n; ++j) {
      auto it = index.find(elems[i] * elems[j]);
      if (it == index.end())
        throw InvalidPermutationError("closure not closed under products");  // unreachable
      t.at(i, j) = it->second;
    }
  return validate_group(t);
}

}  // namespace gyro
