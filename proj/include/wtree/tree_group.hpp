#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wtree/canonical.hpp"
#include "wtree/linalg.hpp"
#include "wtree/tree_sum.hpp"

namespace wtree {

/// The four subtrees around an interior edge. With u = (a, b) and
/// v = (c, d), the three trees are
///   I = <(a,b),(c,d)>,  H = <(a,c),(b,d)>,  X = <(a,d),(b,c)>
/// and I - H + X is the IHX relator.
struct IhxTriple {
  RootedTree a, b, c, d;

  DecoratedTree i_tree() const;
  DecoratedTree h_tree() const;
  DecoratedTree x_tree() const;
  int order() const { return a.order() + b.order() + c.order() + d.order() + 2; }
};

/// Reads the triple at an interior edge so that i_tree() is `tree` itself
/// (same orientations, sign +1). The edge must carry the trivial word.
IhxTriple ihx_triple_at(const DecoratedTree& tree, EdgeId interior_edge);

TreeSum ihx_relator(const IhxTriple& triple, const Context& ctx);

struct GroupOptions {
  EnumerationBounds bounds;
  /// Restrict generators to trees whose labels are pairwise distinct.
  bool nonrepeating = false;
};

struct Relator {
  IhxTriple triple;
  TreeSum sum;
};

/// One relator per (canonical tree, interior edge), in canonical order.
std::vector<Relator> ihx_relator_set(int order, int labels, const GroupOptions& opts = {});
std::vector<TreeSum> ihx_relators(int order, int labels, const GroupOptions& opts = {});

/// Presentation over raw trees: one generator per vertex-orientation class
/// up to orientation-preserving isomorphism, AS rows g + flip_v(g) for every
/// generator and vertex, and one I - H + X row per canonical tree and edge.
struct RelationMatrix {
  std::vector<DecoratedTree> generators;
  std::vector<linalg::SparseVector> rows;  // AS rows first, then IHX rows
  std::size_t as_rows = 0;
  std::size_t ihx_rows = 0;
};
RelationMatrix presentation(int order, int labels, const GroupOptions& opts = {});

struct AbelianGroupStructure {
  int free_rank = 0;
  std::vector<linalg::Int> torsion;  // invariant factors > 1, d1 | d2 | ...

  /// "0", "Z", "Z^3", "Z/2", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;
  friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

/// Cokernel of a sublattice of Z^dimension.
AbelianGroupStructure cokernel_structure(const linalg::IntegerLattice& lattice);

struct GroupTable {
  int order = 0;
  int labels = 0;
  AbelianGroupStructure structure;
  std::size_t generator_count = 0;
  std::size_t relator_count = 0;
};
GroupTable group_table(int order, int labels, const GroupOptions& opts = {});
AbelianGroupStructure group_structure(int order, int labels, const GroupOptions& opts = {});

/// Relator lattice of T_n(m) in the basis of canonical trees: IHX relators
/// plus 2t for every two-torsion t. Build once and reuse; const use is safe
/// from several threads.
class RelatorLattice {
 public:
  RelatorLattice(int order, int labels, const GroupOptions& opts = {}, bool track_provenance = false);

  int order() const { return order_; }
  int labels() const { return labels_; }
  const std::vector<CanonicalTree>& basis() const { return basis_; }
  const std::vector<Relator>& relators() const { return relators_; }
  const linalg::IntegerLattice& lattice() const { return lattice_; }

  /// Coordinates in the canonical basis. Throws std::invalid_argument for
  /// trees of the wrong order, out-of-range or (if nonrepeating) repeated
  /// labels, or nontrivial decorations.
  linalg::SparseVector coordinates(const TreeSum& sum) const;
  TreeSum from_coordinates(const linalg::SparseVector& v) const;

  bool is_zero(const TreeSum& sum) const;
  /// Unique representative of the class of `sum` modulo the relators.
  TreeSum normal_form(const TreeSum& sum) const;
  /// Integer coefficients over relators() whose combination agrees with
  /// `sum` up to even multiples of two-torsion trees; nullopt if sum != 0.
  std::optional<std::vector<std::pair<std::size_t, linalg::Int>>> relator_combination(const TreeSum& sum) const;

  AbelianGroupStructure structure() const { return cokernel_structure(lattice_); }

 private:
  int order_;
  int labels_;
  bool nonrepeating_;
  std::vector<CanonicalTree> basis_;
  std::unordered_map<std::string, int> index_;
  std::vector<Relator> relators_;
  linalg::IntegerLattice lattice_;
};

bool is_zero(const TreeSum& sum, int order, int labels, const GroupOptions& opts = {});

/// Interior edge at which one IHX step moves a tree closer to a caterpillar,
/// or -1 if the tree is already simple.
EdgeId simplifying_edge(const DecoratedTree& tree);

/// Rewrites an undecorated tree as a combination of simple trees that agrees
/// with it modulo IHX.
TreeSum reduce_to_simple(const CanonicalTree& tree, const Context& ctx);

/// Keeps the terms whose leaf labels are pairwise distinct.
TreeSum nonrepeating_project(const TreeSum& sum);

}  // namespace wtree
