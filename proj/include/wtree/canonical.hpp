#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtree/tree.hpp"

namespace wtree {

/// Normal form of a decorated tree modulo isomorphism, AS, OR and HOL.
///
/// The code is itself a string in the tree grammar: the tree is rooted at the
/// univalent vertex giving the smallest code, every edge is oriented away from
/// that leaf, interior edges carry the identity, each remaining leaf edge
/// carries the word read along the path from the root leaf, and children are
/// ordered by code.
class CanonicalTree {
 public:
  const std::string& code() const { return code_; }
  /// Some self-isomorphism reverses an odd number of vertex orientations,
  /// so the tree equals its own negative.
  bool two_torsion() const { return two_torsion_; }
  int order() const { return order_; }
  /// Sorted multiset of leaf labels.
  const std::vector<int>& labels() const { return labels_; }
  bool decorated() const { return max_generator_ > 0; }
  int max_generator() const { return max_generator_; }
  bool nonrepeating() const;

  /// The canonical representative (edge 0 is the root leaf's edge).
  DecoratedTree tree() const;

  friend bool operator==(const CanonicalTree& a, const CanonicalTree& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const CanonicalTree& a, const CanonicalTree& b) {
    return a.code_ <=> b.code_;
  }

 private:
  friend struct CanonicalBuilder;
  std::string code_;
  bool two_torsion_ = false;
  int order_ = 0;
  int max_generator_ = 0;
  std::vector<int> labels_;
};

struct Canonicalized {
  CanonicalTree tree;
  /// Sign relating the input to tree.tree(); for two-torsion trees either
  /// sign is correct and the one returned is arbitrary but deterministic.
  int sign = 1;
  /// edge_map[e] is the edge of tree.tree() that input edge e becomes.
  std::vector<EdgeId> edge_map;
  /// Univalent vertex of the input chosen as root.
  VertexId root_leaf = 0;
};

Canonicalized canonicalize(const DecoratedTree& tree);
Canonicalized canonicalize(const SignedTree& tree);

/// Isomorphism invariant of the vertex-oriented tree itself (HOL and OR are
/// quotiented, AS is not): two trees get the same code iff some label- and
/// orientation-preserving isomorphism relates them.
std::string oriented_code(const DecoratedTree& tree);

/// Canonical form of a rooted tree under AS (child swaps) and HOL relative
/// to the root.
struct CanonicalRooted {
  std::string code;
  int sign = 1;
  bool two_torsion = false;
};
CanonicalRooted canonicalize_rooted(const RootedTree& tree, int sign = 1);

/// HOL/OR-equivalent tree with the same vertices, edges and cyclic orders,
/// oriented away from the canonical root leaf, in which interior edges and
/// the root leaf's edge are trivial.
DecoratedTree hol_normalize(const DecoratedTree& tree);

class BoundsExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationBounds {
  int max_order = 4;
  int max_labels = 6;
};

void check_bounds(int order, int labels, const EnumerationBounds& bounds);

/// Every canonical undecorated order-n tree with labels in 1..m, sorted by
/// code and duplicate-free.
std::vector<CanonicalTree> all_trees(int order, int labels, const EnumerationBounds& bounds = {});

}  // namespace wtree
