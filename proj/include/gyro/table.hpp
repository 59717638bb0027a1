#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gyro {

// Element id: index into the carrier {0..n-1} of a finite magma.
using elem_t = int;

// Permutation of {0..n-1}, stored by images.
struct Perm {
  std::vector<elem_t> image;

  Perm() = default;
  explicit Perm(std::vector<elem_t> img) : image(std::move(img)) {}

  static Perm identity(int n) {
    Perm p;
    p.image.resize(n);
    for (int i = 0; i < n; ++i) p.image[i] = i;
    return p;
  }

  int degree() const { return static_cast<int>(image.size()); }
  elem_t operator()(elem_t x) const { return image[x]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (image[i] != i) return false;
    return true;
  }

  // (p * q)(x) = p(q(x)); q acts first.
  Perm operator*(const Perm& q) const {
    Perm r;
    r.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) r.image[i] = image[q.image[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) r.image[image[i]] = static_cast<elem_t>(i);
    return r;
  }

  auto operator<=>(const Perm&) const = default;
};

// True if image is a bijection on {0..n-1}.
bool is_bijection(const std::vector<elem_t>& image, int n);

// Cayley table of a finite binary operation on {0..n-1}.
// cells is row-major: at(a, b) = a∘b. names, when non-empty, holds one
// display string per element.
struct OpTable {
  int n = 0;
  std::vector<elem_t> cells;
  std::vector<std::string> names;

  OpTable() = default;
  OpTable(int size, std::vector<elem_t> c, std::vector<std::string> nm = {})
      : n(size), cells(std::move(c)), names(std::move(nm)) {}

  elem_t at(elem_t a, elem_t b) const {
    return cells[static_cast<std::size_t>(a) * n + b];
  }
  elem_t& at(elem_t a, elem_t b) {
    return cells[static_cast<std::size_t>(a) * n + b];
  }

  // Square, entries in range, names absent or one per element.
  bool well_formed() const;

  // names[x] when present, decimal id otherwise.
  std::string name_of(elem_t x) const;

  bool operator==(const OpTable&) const = default;
};

// Relabel every element by sigma: result.at(sigma(a), sigma(b)) = sigma(t.at(a, b)).
// Names follow their elements.
OpTable relabel(const OpTable& t, const Perm& sigma);

// True if every row and every column of t is a permutation of {0..n-1}.
bool is_latin_square(const OpTable& t);

// Index of the two-sided identity of t, or -1 if there is none.
elem_t find_identity(const OpTable& t);

// True if t.at(a, t.at(b, c)) == t.at(t.at(a, b), c) for all a, b, c.
bool is_associative(const OpTable& t);

}  // namespace gyro
