#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wtree::linalg {

using Int = std::int64_t;

/// Raised instead of silently wrapping when an intermediate leaves int64.
class Overflow : public std::overflow_error {
 public:
  Overflow() : std::overflow_error("integer overflow in exact arithmetic") {}
};

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow();
  return r;
}
inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow();
  return r;
}
inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
  return r;
}
/// Floor division (b > 0 not required, b != 0).
Int floor_div(Int a, Int b);

struct ExtendedGcd {
  Int g, x, y;  // x*a + y*b == g >= 0
};
ExtendedGcd extended_gcd(Int a, Int b);

/// Sparse integer vector: (index, value) pairs sorted by index, no zeros.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::vector<std::pair<int, Int>> entries);  // any order, duplicates summed

  const std::vector<std::pair<int, Int>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Int at(int index) const;
  /// Smallest index with a nonzero entry; -1 when empty.
  int leading() const { return entries_.empty() ? -1 : entries_.front().first; }
  Int leading_value() const { return entries_.front().second; }

  /// a*x + b*y
  static SparseVector combine(Int a, const SparseVector& x, Int b, const SparseVector& y);
  SparseVector scaled(Int k) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<std::pair<int, Int>> entries_;
};

/// Sublattice of Z^dimension spanned by added generators, kept as an echelon
/// basis (one row per pivot column, positive pivot). Membership and normal
/// forms are exact. Optionally records each basis row as a combination of the
/// generators in insertion order.
class IntegerLattice {
 public:
  explicit IntegerLattice(int dimension, bool track_provenance = false);

  /// Returns the generator's index.
  std::size_t add_generator(const SparseVector& v);
  std::size_t generator_count() const { return generators_; }

  int dimension() const { return dimension_; }
  bool tracks_provenance() const { return track_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Remainder with every pivot entry in [0, pivot); equal for two vectors
  /// iff they differ by a lattice element.
  SparseVector normal_form(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return normal_form(v).empty(); }
  /// Coefficients c with v == sum c[k] * generator_k, or nullopt if v is not
  /// in the lattice. Requires provenance tracking.
  std::optional<SparseVector> express(const SparseVector& v) const;

  /// Invariant factors of the lattice basis (all nonzero diagonal entries of
  /// its Smith form, 1s included, ascending).
  std::vector<Int> invariant_factors() const;

  struct Row {
    SparseVector values;
    SparseVector provenance;
  };
  const std::map<int, Row>& rows() const { return rows_; }

 private:
  int dimension_;
  bool track_;
  std::size_t generators_ = 0;
  std::map<int, Row> rows_;  // pivot column -> row
};

using DenseMatrix = std::vector<std::vector<Int>>;

struct SmithResult {
  std::vector<Int> factors;  // nonzero diagonal, d1 | d2 | ...
  int rank = 0;
};

/// Smith normal form by unimodular row and column operations.
SmithResult smith_normal_form(DenseMatrix m);

}  // namespace wtree::linalg
