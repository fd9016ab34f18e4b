#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wtree/canonical.hpp"
#include "wtree/tree.hpp"
#include "wtree/tree_sum.hpp"

namespace wtree::lie {

using Word = std::vector<int>;  // generator indices 1..m

/// Element of the free associative algebra over X_1, X_2, ... with integer
/// coefficients. Lie elements live here through their commutator expansion.
class LieElement {
 public:
  LieElement() = default;
  static LieElement generator(int i);

  const std::map<Word, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Word& w) const;

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement scaled(std::int64_t k) const;
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator-(const LieElement& a) { return a.scaled(-1); }
  friend LieElement operator*(const LieElement& a, const LieElement& b);  // concatenation product
  friend bool operator==(const LieElement&, const LieElement&) = default;

  /// e.g. "X1X2 - X2X1", "0".
  std::string to_string() const;

 private:
  void add_term(const Word& w, std::int64_t c);
  std::map<Word, std::int64_t> terms_;
};

LieElement lie_bracket(const LieElement& a, const LieElement& b);

class DecoratedInput : public std::invalid_argument {
 public:
  DecoratedInput() : std::invalid_argument("Lie images need trivial decorations") {}
};

LieElement rooted_tree_to_lie(const RootedTree& tree);

/// Label -> Lie element. Components that vanish are omitted.
using EtaValue = std::map<int, LieElement>;

/// Sum over univalent vertices v of the tree rooted at v, filed under label(v).
EtaValue eta(const DecoratedTree& tree);
EtaValue eta(const TreeSum& sum);
bool is_zero(const EtaValue& value);

/// Lyndon words of the given length over 1..m in lexicographic order.
std::vector<Word> lyndon_words(int m, int length);
/// Standard bracketing of a Lyndon word, e.g. "[X1,[X1,X2]]".
std::string standard_bracketing(const Word& lyndon);
LieElement standard_bracket(const Word& lyndon);

struct LieBounds {
  int max_length = 8;
};
std::vector<LieElement> hall_basis(int m, int length, const LieBounds& bounds = {});

/// Rank over Q of the span of the given elements.
int rank(const std::vector<LieElement>& elements);
int rank(const std::vector<EtaValue>& values);

/// Rank of {eta(t) : t in all_trees(order, labels)}.
int rational_rank_bound(int order, int labels, const EnumerationBounds& bounds = {}, bool nonrepeating = false);

}  // namespace wtree::lie
