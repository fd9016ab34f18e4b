#include "wtree/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wtree/tree_io.hpp"

namespace wtree {

bool CanonicalTree::nonrepeating() const {
  return std::adjacent_find(labels_.begin(), labels_.end()) == labels_.end();
}

DecoratedTree CanonicalTree::tree() const { return parse_unrooted(code_, Context{0, 26}); }

struct CanonicalBuilder {
  static CanonicalTree make(std::string code, bool two_torsion, const DecoratedTree& tree) {
    CanonicalTree out;
    out.code_ = std::move(code);
    out.two_torsion_ = two_torsion;
    out.order_ = tree.order();
    out.labels_ = tree.leaf_labels();
    for (const auto& e : tree.edges()) out.max_generator_ = std::max(out.max_generator_, e.word.max_generator());
    return out;
  }
};

namespace {

struct Sub {
  std::string code;
  int sign = 1;
  bool ambiguous = false;
  std::vector<EdgeId> edges;  // canonical preorder, starting with the edge above
};

std::string leaf_code(int label, const GroupWord& path) {
  std::string out = std::to_string(label);
  if (!path.empty()) out += ":" + path.to_string();
  return out;
}

Sub visit(const DecoratedTree& tree, VertexId v, EdgeId parent_edge, const GroupWord& path, bool sort = true) {
  const auto& vx = tree.vertex(v);
  if (vx.is_leaf()) return {leaf_code(vx.label, path), 1, false, {parent_edge}};
  int slot = 0;
  while (vx.edges[slot] != parent_edge) ++slot;
  const EdgeId e1 = vx.edges[(slot + 1) % 3];
  const EdgeId e2 = vx.edges[(slot + 2) % 3];
  Sub s1 = visit(tree, tree.other_end(e1, v), e1, path * tree.word_from(e1, v), sort);
  Sub s2 = visit(tree, tree.other_end(e2, v), e2, path * tree.word_from(e2, v), sort);
  std::string forward = "(" + s1.code + "," + s2.code + ")";
  std::string backward = sort ? "(" + s2.code + "," + s1.code + ")" : forward;
  Sub out;
  out.ambiguous = s1.ambiguous || s2.ambiguous || (sort && forward == backward);
  out.edges.push_back(parent_edge);
  const Sub* first = &s1;
  const Sub* second = &s2;
  if (backward < forward) {
    out.code = std::move(backward);
    out.sign = -s1.sign * s2.sign;
    std::swap(first, second);
  } else {
    out.code = std::move(forward);
    out.sign = s1.sign * s2.sign;
  }
  out.edges.insert(out.edges.end(), first->edges.begin(), first->edges.end());
  out.edges.insert(out.edges.end(), second->edges.begin(), second->edges.end());
  return out;
}

Sub visit_rooted(const RootedTree& t, const GroupWord& path) {
  if (t.is_leaf()) return {leaf_code(t.label(), path), 1, false, {}};
  const RootedTree left = t.left();
  const RootedTree right = t.right();
  Sub s1 = visit_rooted(left, path * left.word());
  Sub s2 = visit_rooted(right, path * right.word());
  std::string forward = "(" + s1.code + "," + s2.code + ")";
  std::string backward = "(" + s2.code + "," + s1.code + ")";
  Sub out;
  out.ambiguous = s1.ambiguous || s2.ambiguous || forward == backward;
  if (backward < forward) {
    out.code = std::move(backward);
    out.sign = -s1.sign * s2.sign;
  } else {
    out.code = std::move(forward);
    out.sign = s1.sign * s2.sign;
  }
  return out;
}

}  // namespace

Canonicalized canonicalize(const DecoratedTree& tree) {
  bool have_best = false;
  Sub best;
  VertexId best_root = 0;
  bool torsion = false;
  for (VertexId r = 0; r < static_cast<VertexId>(tree.vertices().size()); ++r) {
    const auto& rv = tree.vertex(r);
    if (!rv.is_leaf()) continue;
    const EdgeId e = rv.edges[0];
    Sub below = visit(tree, tree.other_end(e, r), e, tree.word_from(e, r));
    below.code = "inner(" + std::to_string(rv.label) + "," + below.code + ",)";
    if (!have_best || below.code < best.code) {
      have_best = true;
      torsion = below.ambiguous;
      best = std::move(below);
      best_root = r;
    } else if (below.code == best.code) {
      torsion = torsion || below.ambiguous || below.sign != best.sign;
    }
  }
  Canonicalized out{CanonicalBuilder::make(best.code, torsion, tree), best.sign, {}, best_root};
  out.edge_map.assign(tree.edges().size(), -1);
  for (std::size_t i = 0; i < best.edges.size(); ++i) out.edge_map[best.edges[i]] = static_cast<EdgeId>(i);
  return out;
}

std::string oriented_code(const DecoratedTree& tree) {
  std::string best;
  for (VertexId r = 0; r < static_cast<VertexId>(tree.vertices().size()); ++r) {
    const auto& rv = tree.vertex(r);
    if (!rv.is_leaf()) continue;
    const EdgeId e = rv.edges[0];
    std::string code = "inner(" + std::to_string(rv.label) + "," +
                       visit(tree, tree.other_end(e, r), e, tree.word_from(e, r), false).code + ",)";
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Canonicalized canonicalize(const SignedTree& tree) {
  Canonicalized out = canonicalize(tree.tree);
  out.sign *= tree.sign;
  return out;
}

CanonicalRooted canonicalize_rooted(const RootedTree& tree, int sign) {
  Sub s = visit_rooted(tree, tree.word());
  return {s.code, s.sign * sign, s.ambiguous};
}

DecoratedTree hol_normalize(const DecoratedTree& tree) {
  const VertexId root = canonicalize(tree).root_leaf;
  std::vector<DecoratedTree::Vertex> vertices = tree.vertices();
  std::vector<DecoratedTree::Edge> edges = tree.edges();
  // Depth-first from the root leaf carrying the path word.
  std::vector<std::pair<VertexId, GroupWord>> stack{{root, GroupWord{}}};
  std::vector<bool> seen(vertices.size(), false);
  seen[root] = true;
  while (!stack.empty()) {
    auto [v, path] = stack.back();
    stack.pop_back();
    const int degree = vertices[v].is_leaf() ? 1 : 3;
    for (int k = 0; k < degree; ++k) {
      const EdgeId e = vertices[v].edges[k];
      const VertexId w = tree.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      GroupWord next = path * tree.word_from(e, v);
      edges[e].tail = v;
      edges[e].head = w;
      edges[e].word = (vertices[w].is_leaf() && v != root) ? next : GroupWord{};
      stack.push_back({w, std::move(next)});
    }
  }
  // Order 0: the single edge joins the root leaf to the other leaf.
  if (tree.order() == 0) edges[0].word = tree.word_from(0, root);
  return DecoratedTree(std::move(vertices), std::move(edges));
}

void check_bounds(int order, int labels, const EnumerationBounds& bounds) {
  if (order < 0 || labels < 1) throw std::invalid_argument("order must be >= 0 and labels >= 1");
  if (order > bounds.max_order) {
    throw BoundsExceeded("order " + std::to_string(order) + " exceeds bound " + std::to_string(bounds.max_order));
  }
  if (labels > bounds.max_labels) {
    throw BoundsExceeded("label count " + std::to_string(labels) + " exceeds bound " +
                         std::to_string(bounds.max_labels));
  }
}

std::vector<CanonicalTree> all_trees(int order, int labels, const EnumerationBounds& bounds) {
  check_bounds(order, labels, bounds);
  // Rooted trees up to child swaps, by order.
  std::vector<std::vector<RootedTree>> rooted(order + 1);
  for (int l = 1; l <= labels; ++l) rooted[0].push_back(RootedTree::leaf(l));
  for (int k = 1; k <= order; ++k) {
    for (int i = 0; i <= (k - 1) / 2; ++i) {
      const int j = k - 1 - i;
      for (std::size_t a = 0; a < rooted[i].size(); ++a) {
        for (std::size_t b = (i == j ? a : 0); b < rooted[j].size(); ++b) {
          rooted[k].push_back(RootedTree::product(rooted[i][a], rooted[j][b]));
        }
      }
    }
  }
  std::map<std::string, CanonicalTree> found;
  for (int r = 1; r <= labels; ++r) {
    const RootedTree root = RootedTree::leaf(r);
    for (const RootedTree& t : rooted[order]) {
      Canonicalized c = canonicalize(inner_product(root, t));
      found.try_emplace(c.tree.code(), std::move(c.tree));
    }
  }
  std::vector<CanonicalTree> out;
  out.reserve(found.size());
  for (auto& [code, tree] : found) out.push_back(std::move(tree));
  return out;
}

}  // namespace wtree
