#include "wtree/tree_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace wtree {

using linalg::Int;
using linalg::SparseVector;

DecoratedTree IhxTriple::i_tree() const {
  return inner_product(RootedTree::product(a, b), RootedTree::product(c, d));
}
DecoratedTree IhxTriple::h_tree() const {
  return inner_product(RootedTree::product(a, c), RootedTree::product(b, d));
}
DecoratedTree IhxTriple::x_tree() const {
  return inner_product(RootedTree::product(a, d), RootedTree::product(b, c));
}

IhxTriple ihx_triple_at(const DecoratedTree& tree, EdgeId interior_edge) {
  if (!tree.is_interior(interior_edge)) throw std::invalid_argument("IHX needs an interior edge");
  if (!tree.edge(interior_edge).word.empty()) {
    throw std::invalid_argument("IHX edge must carry the identity (HOL-normalize first)");
  }
  const EdgeSplit split = split_at_edge(tree, interior_edge);
  return {split.tail_side.left(), split.tail_side.right(), split.head_side.left(), split.head_side.right()};
}

TreeSum ihx_relator(const IhxTriple& triple, const Context& ctx) {
  TreeSum out(ctx);
  out.add(triple.i_tree(), 1);
  out.add(triple.h_tree(), -1);
  out.add(triple.x_tree(), 1);
  return out;
}

namespace {

std::vector<CanonicalTree> generator_trees(int order, int labels, const GroupOptions& opts) {
  std::vector<CanonicalTree> trees = all_trees(order, labels, opts.bounds);
  if (opts.nonrepeating) std::erase_if(trees, [](const CanonicalTree& t) { return !t.nonrepeating(); });
  return trees;
}

std::vector<Relator> relators_over(const std::vector<CanonicalTree>& trees, int labels) {
  const Context ctx{labels, 0};
  std::vector<Relator> out;
  for (const CanonicalTree& t : trees) {
    const DecoratedTree tree = t.tree();
    for (EdgeId e : tree.interior_edges()) {
      IhxTriple triple = ihx_triple_at(tree, e);
      TreeSum sum = ihx_relator(triple, ctx);
      out.push_back({std::move(triple), std::move(sum)});
    }
  }
  return out;
}

}  // namespace

std::vector<Relator> ihx_relator_set(int order, int labels, const GroupOptions& opts) {
  return relators_over(generator_trees(order, labels, opts), labels);
}

std::vector<TreeSum> ihx_relators(int order, int labels, const GroupOptions& opts) {
  std::vector<TreeSum> out;
  for (Relator& r : ihx_relator_set(order, labels, opts)) out.push_back(std::move(r.sum));
  return out;
}

RelationMatrix presentation(int order, int labels, const GroupOptions& opts) {
  const std::vector<CanonicalTree> trees = generator_trees(order, labels, opts);
  RelationMatrix out;
  std::map<std::string, int> index;
  // Every vertex orientation of every shape, up to oriented isomorphism.
  for (const CanonicalTree& t : trees) {
    const DecoratedTree base = t.tree();
    std::vector<VertexId> trivalent;
    for (VertexId v = 0; v < static_cast<VertexId>(base.vertices().size()); ++v) {
      if (!base.vertex(v).is_leaf()) trivalent.push_back(v);
    }
    for (unsigned mask = 0; mask < (1u << trivalent.size()); ++mask) {
      DecoratedTree raw = base;
      for (std::size_t k = 0; k < trivalent.size(); ++k) {
        if (mask & (1u << k)) raw = raw.flip_vertex(trivalent[k]);
      }
      auto [it, inserted] = index.try_emplace(oriented_code(raw), static_cast<int>(out.generators.size()));
      if (inserted) out.generators.push_back(std::move(raw));
    }
  }
  for (std::size_t g = 0; g < out.generators.size(); ++g) {
    const DecoratedTree& raw = out.generators[g];
    for (VertexId v = 0; v < static_cast<VertexId>(raw.vertices().size()); ++v) {
      if (raw.vertex(v).is_leaf()) continue;
      const int flipped = index.at(oriented_code(raw.flip_vertex(v)));
      out.rows.emplace_back(std::vector<std::pair<int, Int>>{{static_cast<int>(g), 1}, {flipped, 1}});
      ++out.as_rows;
    }
  }
  for (const Relator& r : relators_over(trees, labels)) {
    out.rows.emplace_back(std::vector<std::pair<int, Int>>{{index.at(oriented_code(r.triple.i_tree())), 1},
                                                          {index.at(oriented_code(r.triple.h_tree())), -1},
                                                          {index.at(oriented_code(r.triple.x_tree())), 1}});
    ++out.ihx_rows;
  }
  return out;
}

std::string AbelianGroupStructure::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (Int d : torsion) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

AbelianGroupStructure cokernel_structure(const linalg::IntegerLattice& lattice) {
  AbelianGroupStructure out;
  out.free_rank = lattice.dimension() - lattice.rank();
  for (Int d : lattice.invariant_factors()) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

GroupTable group_table(int order, int labels, const GroupOptions& opts) {
  const RelationMatrix pres = presentation(order, labels, opts);
  linalg::IntegerLattice lattice(static_cast<int>(pres.generators.size()));
  for (const SparseVector& row : pres.rows) lattice.add_generator(row);
  return {order, labels, cokernel_structure(lattice), pres.generators.size(), pres.rows.size()};
}

AbelianGroupStructure group_structure(int order, int labels, const GroupOptions& opts) {
  return group_table(order, labels, opts).structure;
}

RelatorLattice::RelatorLattice(int order, int labels, const GroupOptions& opts, bool track_provenance)
    : order_(order),
      labels_(labels),
      nonrepeating_(opts.nonrepeating),
      basis_(generator_trees(order, labels, opts)),
      relators_(relators_over(basis_, labels)),
      lattice_(static_cast<int>(basis_.size()), track_provenance) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i].code(), static_cast<int>(i));
  for (const Relator& r : relators_) lattice_.add_generator(coordinates(r.sum));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].two_torsion()) lattice_.add_generator(SparseVector({{static_cast<int>(i), 2}}));
  }
}

SparseVector RelatorLattice::coordinates(const TreeSum& sum) const {
  std::vector<std::pair<int, Int>> entries;
  for (const auto& [tree, c] : sum.terms()) {
    if (tree.order() != order_) {
      throw std::invalid_argument("tree " + tree.code() + " has order " + std::to_string(tree.order()) +
                                  ", expected " + std::to_string(order_));
    }
    if (tree.decorated()) throw std::invalid_argument("relator lattice needs trivial decorations");
    auto it = index_.find(tree.code());
    if (it == index_.end()) {
      throw std::invalid_argument("tree " + tree.code() + " is outside the generator set" +
                                  (nonrepeating_ ? " (nonrepeating labels required)" : ""));
    }
    entries.emplace_back(it->second, c);
  }
  return SparseVector(std::move(entries));
}

TreeSum RelatorLattice::from_coordinates(const SparseVector& v) const {
  TreeSum out(Context{labels_, 0});
  for (const auto& [i, c] : v.entries()) out.add(basis_.at(i), c);
  return out;
}

bool RelatorLattice::is_zero(const TreeSum& sum) const { return lattice_.contains(coordinates(sum)); }

TreeSum RelatorLattice::normal_form(const TreeSum& sum) const {
  TreeSum out = from_coordinates(lattice_.normal_form(coordinates(sum)));
  return out;
}

std::optional<std::vector<std::pair<std::size_t, Int>>> RelatorLattice::relator_combination(
    const TreeSum& sum) const {
  const auto coefficients = lattice_.express(coordinates(sum));
  if (!coefficients) return std::nullopt;
  std::vector<std::pair<std::size_t, Int>> out;
  for (const auto& [k, c] : coefficients->entries()) {
    if (static_cast<std::size_t>(k) < relators_.size()) out.emplace_back(k, c);
  }
  return out;
}

bool is_zero(const TreeSum& sum, int order, int labels, const GroupOptions& opts) {
  return RelatorLattice(order, labels, opts).is_zero(sum);
}

namespace {

// Vertices of the trivalent core on a longest path, in path order.
std::vector<VertexId> longest_core_path(const DecoratedTree& tree) {
  const int n = static_cast<int>(tree.vertices().size());
  std::vector<VertexId> best;
  for (VertexId s = 0; s < n; ++s) {
    if (tree.vertex(s).is_leaf()) continue;
    std::vector<int> parent(n, -2);
    std::deque<VertexId> queue{s};
    parent[s] = -1;
    VertexId last = s;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      last = v;
      for (EdgeId e : tree.vertex(v).edges) {
        const VertexId w = tree.other_end(e, v);
        if (tree.vertex(w).is_leaf() || parent[w] != -2) continue;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    std::vector<VertexId> path;
    for (VertexId v = last; v != -1; v = parent[v]) path.push_back(v);
    if (path.size() > best.size()) best = std::move(path);
  }
  return best;
}

int branch_height(const DecoratedTree& tree, VertexId v, EdgeId parent_edge) {
  if (tree.vertex(v).is_leaf()) return 0;
  int h = 0;
  for (EdgeId e : tree.vertex(v).edges) {
    if (e != parent_edge) h = std::max(h, branch_height(tree, tree.other_end(e, v), e));
  }
  return h + 1;
}

void reduce_into(const DecoratedTree& tree, int sign, TreeSum& out) {
  const EdgeId e = simplifying_edge(tree);
  if (e < 0) {
    out.add(tree, sign);
    return;
  }
  // tree = I = H - X
  const IhxTriple triple = ihx_triple_at(tree, e);
  const Canonicalized h = canonicalize(triple.h_tree());
  const Canonicalized x = canonicalize(triple.x_tree());
  reduce_into(h.tree.tree(), sign * h.sign, out);
  reduce_into(x.tree.tree(), -sign * x.sign, out);
}

}  // namespace

EdgeId simplifying_edge(const DecoratedTree& tree) {
  if (is_simple(tree)) return -1;
  const std::vector<VertexId> spine = longest_core_path(tree);
  std::vector<bool> on_spine(tree.vertices().size(), false);
  for (VertexId v : spine) on_spine[v] = true;
  EdgeId best = -1;
  int best_height = 0;
  for (VertexId s : spine) {
    for (EdgeId e : tree.vertex(s).edges) {
      const VertexId w = tree.other_end(e, s);
      if (tree.vertex(w).is_leaf() || on_spine[w]) continue;
      const int h = branch_height(tree, w, e);
      if (h > best_height) {
        best_height = h;
        best = e;
      }
    }
  }
  return best;
}

TreeSum reduce_to_simple(const CanonicalTree& tree, const Context& ctx) {
  if (tree.decorated()) throw std::invalid_argument("reduce_to_simple needs trivial decorations");
  TreeSum out(ctx);
  reduce_into(tree.tree(), 1, out);
  return out;
}

TreeSum nonrepeating_project(const TreeSum& sum) {
  TreeSum out(sum.context());
  for (const auto& [tree, c] : sum.terms()) {
    if (tree.nonrepeating()) out.add(tree, c);
  }
  return out;
}

}  // namespace wtree
