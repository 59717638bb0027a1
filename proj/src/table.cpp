#include "gyro/table.hpp"

namespace gyro {

bool is_bijection(const std::vector<elem_t>& image, int n) {
  if (static_cast<int>(image.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (elem_t v : image) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool OpTable::well_formed() const {
  if (n < 1) return false;
  if (cells.size() != static_cast<std::size_t>(n) * n) return false;
  for (elem_t v : cells)
    if (v < 0 || v >= n) return false;
  return names.empty() || names.size() == static_cast<std::size_t>(n);
}

std::string OpTable::name_of(elem_t x) const {
  if (!names.empty() && x >= 0 && x < n) return names[x];
  return std::to_string(x);
}

OpTable relabel(const OpTable& t, const Perm& sigma) {
  OpTable r;
  r.n = t.n;
  r.cells.assign(t.cells.size(), 0);
  for (elem_t a = 0; a < t.n; ++a)
    for (elem_t b = 0; b < t.n; ++b) r.at(sigma(a), sigma(b)) = sigma(t.at(a, b));
  if (!t.names.empty()) {
    r.names.resize(t.n);
    for (elem_t a = 0; a < t.n; ++a) r.names[sigma(a)] = t.names[a];
  }
  return r;
}

bool is_latin_square(const OpTable& t) {
  std::vector<char> seen(t.n);
  for (elem_t a = 0; a < t.n; ++a) {
    seen.assign(t.n, 0);
    for (elem_t b = 0; b < t.n; ++b) {
      elem_t v = t.at(a, b);
      if (seen[v]) return false;
      seen[v] = 1;
    }
    seen.assign(t.n, 0);
    for (elem_t b = 0; b < t.n; ++b) {
      elem_t v = t.at(b, a);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

elem_t find_identity(const OpTable& t) {
  for (elem_t e = 0; e < t.n; ++e) {
    bool ok = true;
    for (elem_t a = 0; a < t.n && ok; ++a)
      ok = t.at(e, a) == a && t.at(a, e) == a;
    if (ok) return e;
  }
  return -1;
}

bool is_associative(const OpTable& t) {
  for (elem_t a = 0; a < t.n; ++a)
    for (elem_t b = 0; b < t.n; ++b)
      for (elem_t c = 0; c < t.n; ++c)
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) return false;
  return true;
}

}  // namespace gyro
