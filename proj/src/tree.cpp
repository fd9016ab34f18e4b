#include "wtree/tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wtree {

struct RootedTree::Node {
  int label = 0;
  GroupWord word;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  int order = 0;
};

RootedTree RootedTree::leaf(int label, GroupWord word) {
  if (label <= 0) throw std::invalid_argument("leaf labels are positive");
  auto node = std::make_shared<Node>();
  node->label = label;
  node->word = std::move(word);
  return RootedTree(std::move(node));
}

RootedTree RootedTree::product(const RootedTree& left, const RootedTree& right) {
  auto node = std::make_shared<Node>();
  node->left = left.node_;
  node->right = right.node_;
  node->order = left.order() + right.order() + 1;
  return RootedTree(std::move(node));
}

bool RootedTree::is_leaf() const { return node_->label > 0; }
int RootedTree::label() const { return node_->label; }

RootedTree RootedTree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return RootedTree(node_->left);
}

RootedTree RootedTree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return RootedTree(node_->right);
}

const GroupWord& RootedTree::word() const { return node_->word; }

RootedTree RootedTree::with_word(GroupWord word) const {
  auto node = std::make_shared<Node>(*node_);
  node->word = std::move(word);
  return RootedTree(std::move(node));
}

int RootedTree::order() const { return node_->order; }

std::vector<int> RootedTree::labels() const {
  std::vector<int> out;
  std::function<void(const Node&)> walk = [&](const Node& n) {
    if (n.label > 0) {
      out.push_back(n.label);
      return;
    }
    walk(*n.left);
    walk(*n.right);
  };
  walk(*node_);
  return out;
}

bool RootedTree::has_decorations() const {
  std::function<bool(const Node&)> walk = [&](const Node& n) {
    if (!n.word.empty()) return true;
    return n.label == 0 && (walk(*n.left) || walk(*n.right));
  };
  return walk(*node_);
}

bool operator==(const RootedTree& lhs, const RootedTree& rhs) {
  std::function<bool(const RootedTree::Node&, const RootedTree::Node&)> eq =
      [&](const RootedTree::Node& a, const RootedTree::Node& b) {
        if (a.label != b.label || a.word != b.word) return false;
        if (a.label > 0) return true;
        return eq(*a.left, *b.left) && eq(*a.right, *b.right);
      };
  return eq(*lhs.node_, *rhs.node_);
}

DecoratedTree::DecoratedTree(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n_edges = static_cast<int>(edges_.size());
  const int n_vertices = static_cast<int>(vertices_.size());
  if (n_edges == 0 || n_edges % 2 == 0 || n_vertices != n_edges + 1) {
    throw std::invalid_argument("a unitrivalent tree has 2n+1 edges and 2n+2 vertices");
  }
  int trivalent = 0;
  std::vector<int> incidence(n_vertices, 0);
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= n_vertices || e.head < 0 || e.head >= n_vertices || e.tail == e.head) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    ++incidence[e.tail];
    ++incidence[e.head];
  }
  for (int v = 0; v < n_vertices; ++v) {
    const Vertex& vx = vertices_[v];
    const int degree = vx.is_leaf() ? 1 : 3;
    if (!vx.is_leaf()) ++trivalent;
    if (incidence[v] != degree) throw std::invalid_argument("vertex degree must be 1 or 3");
    for (int k = 0; k < degree; ++k) {
      const EdgeId e = vx.edges[k];
      if (e < 0 || e >= n_edges) throw std::invalid_argument("vertex lists an unknown edge");
      if (edges_[e].tail != v && edges_[e].head != v) {
        throw std::invalid_argument("vertex lists an edge that is not incident to it");
      }
      for (int j = 0; j < k; ++j) {
        if (vx.edges[j] == e) throw std::invalid_argument("vertex lists an edge twice");
      }
    }
  }
  if (2 * trivalent + 1 != n_edges) {
    throw std::invalid_argument("edge count must be twice the trivalent count plus one");
  }
  // Connected with |E| = |V| - 1 means a tree.
  std::vector<bool> seen(n_vertices, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    const int degree = vertices_[v].is_leaf() ? 1 : 3;
    for (int k = 0; k < degree; ++k) {
      const VertexId w = other_end(vertices_[v].edges[k], v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n_vertices) throw std::invalid_argument("graph is not connected");
}

std::vector<int> DecoratedTree::leaf_labels() const {
  std::vector<int> out;
  for (const Vertex& v : vertices_) {
    if (v.is_leaf()) out.push_back(v.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DecoratedTree::has_decorations() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.word.empty(); });
}

VertexId DecoratedTree::other_end(EdgeId e, VertexId v) const {
  const Edge& edge = edges_.at(e);
  if (edge.tail == v) return edge.head;
  if (edge.head == v) return edge.tail;
  throw std::invalid_argument("edge is not incident to vertex");
}

GroupWord DecoratedTree::word_from(EdgeId e, VertexId from) const {
  const Edge& edge = edges_.at(e);
  if (edge.tail == from) return edge.word;
  if (edge.head == from) return edge.word.inverse();
  throw std::invalid_argument("edge is not incident to vertex");
}

bool DecoratedTree::is_interior(EdgeId e) const {
  const Edge& edge = edges_.at(e);
  return !vertices_[edge.tail].is_leaf() && !vertices_[edge.head].is_leaf();
}

std::vector<EdgeId> DecoratedTree::interior_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (is_interior(e)) out.push_back(e);
  }
  return out;
}

DecoratedTree DecoratedTree::flip_vertex(VertexId v) const {
  if (vertices_.at(v).is_leaf()) throw std::invalid_argument("cannot flip a univalent vertex");
  DecoratedTree out = *this;
  std::swap(out.vertices_[v].edges[0], out.vertices_[v].edges[1]);
  return out;
}

DecoratedTree DecoratedTree::reverse_edge(EdgeId e) const {
  DecoratedTree out = *this;
  Edge& edge = out.edges_.at(e);
  std::swap(edge.tail, edge.head);
  edge.word = edge.word.inverse();
  return out;
}

DecoratedTree DecoratedTree::apply_holonomy(VertexId v, const GroupWord& h) const {
  if (vertices_.at(v).is_leaf()) throw std::invalid_argument("holonomy acts at trivalent vertices");
  DecoratedTree out = *this;
  for (EdgeId e : vertices_[v].edges) {
    Edge& edge = out.edges_[e];
    if (edge.tail == v) {
      edge.word = h * edge.word;
    } else {
      edge.word = edge.word * h.inverse();
    }
  }
  return out;
}

DecoratedTree DecoratedTree::with_edge_word(EdgeId e, GroupWord word) const {
  DecoratedTree out = *this;
  out.edges_.at(e).word = std::move(word);
  return out;
}

namespace {

class InnerBuilder {
 public:
  std::vector<DecoratedTree::Vertex> vertices;
  std::vector<DecoratedTree::Edge> edges;

  // Builds `t` with its root slot pointing at `parent_edge`; returns the top vertex.
  VertexId build(const RootedTree& t, EdgeId parent_edge) {
    const VertexId v = static_cast<VertexId>(vertices.size());
    vertices.emplace_back();
    if (t.is_leaf()) {
      vertices[v].label = t.label();
      vertices[v].edges[0] = parent_edge;
      return v;
    }
    vertices[v].edges[2] = parent_edge;
    const RootedTree children[2] = {t.left(), t.right()};
    for (int k = 0; k < 2; ++k) {
      const EdgeId e = static_cast<EdgeId>(edges.size());
      edges.push_back({v, -1, children[k].word()});
      vertices[v].edges[k] = e;
      const VertexId child = build(children[k], e);
      edges[e].head = child;
    }
    return v;
  }
};

}  // namespace

DecoratedTree inner_product(const RootedTree& a, const RootedTree& b, const GroupWord& g) {
  InnerBuilder builder;
  builder.edges.push_back({-1, -1, a.word().inverse() * g * b.word()});
  const VertexId top_a = builder.build(a, 0);
  const VertexId top_b = builder.build(b, 0);
  builder.edges[0].tail = top_a;
  builder.edges[0].head = top_b;
  return DecoratedTree(std::move(builder.vertices), std::move(builder.edges));
}

namespace {

RootedTree rooted_from(const DecoratedTree& tree, VertexId v, EdgeId parent_edge) {
  const DecoratedTree::Vertex& vx = tree.vertex(v);
  if (vx.is_leaf()) return RootedTree::leaf(vx.label);
  int slot = 0;
  while (vx.edges[slot] != parent_edge) ++slot;
  const EdgeId first = vx.edges[(slot + 1) % 3];
  const EdgeId second = vx.edges[(slot + 2) % 3];
  RootedTree left = rooted_from(tree, tree.other_end(first, v), first).with_word(tree.word_from(first, v));
  RootedTree right = rooted_from(tree, tree.other_end(second, v), second).with_word(tree.word_from(second, v));
  return RootedTree::product(left, right);
}

}  // namespace

EdgeSplit split_at_edge(const DecoratedTree& tree, EdgeId e) {
  const DecoratedTree::Edge& edge = tree.edge(e);
  return {rooted_from(tree, edge.tail, e), rooted_from(tree, edge.head, e), edge.word};
}

bool is_simple(const DecoratedTree& tree) {
  for (VertexId v = 0; v < static_cast<VertexId>(tree.vertices().size()); ++v) {
    const auto& vx = tree.vertex(v);
    if (vx.is_leaf()) continue;
    int trivalent_neighbours = 0;
    for (EdgeId e : vx.edges) {
      if (!tree.vertex(tree.other_end(e, v)).is_leaf()) ++trivalent_neighbours;
    }
    if (trivalent_neighbours > 2) return false;
  }
  return true;
}

}  // namespace wtree
