#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "wtree/canonical.hpp"

namespace wtree {

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite integer combination of canonical trees. Zero coefficients are never
/// stored; coefficients of two-torsion trees live in {0, 1}.
class TreeSum {
 public:
  using Terms = std::map<CanonicalTree, std::int64_t>;

  explicit TreeSum(Context ctx = {}) : ctx_(ctx) {}

  const Context& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(const CanonicalTree& tree) const;

  /// Throws ContextMismatch when labels or letters fall outside the context.
  void add(const CanonicalTree& tree, std::int64_t coefficient);
  void add(const SignedTree& tree);
  void add(const DecoratedTree& tree, int sign) { add(SignedTree{sign, tree}); }

  TreeSum& operator+=(const TreeSum& other);
  TreeSum& operator-=(const TreeSum& other);
  friend TreeSum operator+(TreeSum a, const TreeSum& b) { return a += b; }
  friend TreeSum operator-(TreeSum a, const TreeSum& b) { return a -= b; }
  TreeSum operator-() const { return scaled(-1); }
  TreeSum scaled(std::int64_t k) const;

  /// "0" or terms like "+inner(1,(2,3),) -2 inner(...)" in code order.
  std::string to_string() const;

  friend bool operator==(const TreeSum& a, const TreeSum& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

 private:
  void check(const TreeSum& other) const;
  Context ctx_;
  Terms terms_;
};

inline TreeSum sum_add(const TreeSum& a, const TreeSum& b) { return a + b; }
inline TreeSum sum_negate(const TreeSum& a) { return -a; }
inline TreeSum sum_scale(const TreeSum& a, std::int64_t k) { return a.scaled(k); }

}  // namespace wtree
