#pragma once

#include <array>
#include <memory>
#include <vector>

#include "wtree/group_word.hpp"

namespace wtree {

using VertexId = int;
using EdgeId = int;

/// Rooted labelled vertex-oriented unitrivalent tree, i.e. a nonassociative
/// bracketing. Immutable and cheap to copy (shared structure).
///
/// Every subtree carries the decoration of the edge joining it to its parent,
/// oriented away from the root. A node's children are ordered so that the
/// cyclic order at the node is (left, right, root).
class RootedTree {
 public:
  static RootedTree leaf(int label, GroupWord word = {});
  /// Rooted product: joins the two roots at a new trivalent vertex and sprouts
  /// a fresh (undecorated) root edge.
  static RootedTree product(const RootedTree& left, const RootedTree& right);

  bool is_leaf() const;
  int label() const;  // 0 for internal nodes
  RootedTree left() const;
  RootedTree right() const;
  const GroupWord& word() const;
  RootedTree with_word(GroupWord word) const;

  int order() const;
  int leaf_count() const { return order() + 1; }
  /// Leaf labels in left-to-right order.
  std::vector<int> labels() const;
  bool has_decorations() const;

  friend bool operator==(const RootedTree& lhs, const RootedTree& rhs);

 private:
  struct Node;
  explicit RootedTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline RootedTree rooted_product(const RootedTree& a, const RootedTree& b) {
  return RootedTree::product(a, b);
}

/// Unrooted decorated unitrivalent tree with n trivalent vertices, n+2
/// labelled univalent vertices and 2n+1 oriented, group-decorated edges.
///
/// A univalent vertex uses `edges[0]` only. A trivalent vertex lists its three
/// incident edges in cyclic order. Edge 0 is the reference edge used for
/// printing and for edge paths.
class DecoratedTree {
 public:
  struct Vertex {
    int label = 0;  // > 0 for univalent vertices
    std::array<EdgeId, 3> edges{-1, -1, -1};
    bool is_leaf() const { return label > 0; }
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  struct Edge {
    VertexId tail = -1;
    VertexId head = -1;
    GroupWord word;  // decoration read from tail to head
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  /// Throws std::invalid_argument unless the data describe a unitrivalent tree.
  DecoratedTree(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int order() const { return static_cast<int>(edges_.size() - 1) / 2; }
  /// Sorted multiset of leaf labels.
  std::vector<int> leaf_labels() const;
  bool has_decorations() const;

  VertexId other_end(EdgeId e, VertexId v) const;
  /// Decoration of edge `e` read starting at vertex `from`.
  GroupWord word_from(EdgeId e, VertexId from) const;
  /// Both endpoints trivalent.
  bool is_interior(EdgeId e) const;
  std::vector<EdgeId> interior_edges() const;

  /// AS: reverses the cyclic order at a trivalent vertex.
  DecoratedTree flip_vertex(VertexId v) const;
  /// OR: reverses an edge and inverts its decoration.
  DecoratedTree reverse_edge(EdgeId e) const;
  /// HOL: left-multiplies the decorations of the edges at `v`, read away
  /// from `v`, by `h`.
  DecoratedTree apply_holonomy(VertexId v, const GroupWord& h) const;
  /// Replaces one decoration, keeping the orientation.
  DecoratedTree with_edge_word(EdgeId e, GroupWord word) const;

  /// Structural equality (same numbering, orientations and words).
  friend bool operator==(const DecoratedTree&, const DecoratedTree&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Joins the roots of `a` and `b` into one edge oriented from the `a` side to
/// the `b` side, decorated (root word of a)^-1 * g * (root word of b). The
/// fused edge is edge 0; remaining edges are numbered in preorder, `a` first.
DecoratedTree inner_product(const RootedTree& a, const RootedTree& b, const GroupWord& g = {});

/// Inverse of inner_product at an arbitrary edge: inner_product(tail_side,
/// head_side, word) reproduces the tree up to renumbering.
struct EdgeSplit {
  RootedTree tail_side;
  RootedTree head_side;
  GroupWord word;
};
EdgeSplit split_at_edge(const DecoratedTree& tree, EdgeId e);

/// Caterpillar shape: all trivalent vertices lie on a single path.
bool is_simple(const DecoratedTree& tree);

struct SignedTree {
  int sign = 1;
  DecoratedTree tree;
};

struct PuncturedTree {
  SignedTree signed_tree;
  EdgeId marked_edge = 0;
};

}  // namespace wtree
