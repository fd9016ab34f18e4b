#pragma once

// Test-side helpers. The oracles here deliberately avoid the library's own
// canonicalization and lattice code so that they can check it.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wtree/linalg.hpp"
#include "wtree/tower.hpp"
#include "wtree/tree.hpp"
#include "wtree/tree_group.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

// --- brute-force isomorphism search -------------------------------------

/// Every label-preserving graph isomorphism a -> b (as vertex maps), found by
/// backtracking in BFS order. Decorations are ignored.
std::vector<std::vector<int>> isomorphisms(const wtree::DecoratedTree& a, const wtree::DecoratedTree& b);

/// Number of trivalent vertices whose cyclic order the vertex map reverses.
int reversed_vertices(const wtree::DecoratedTree& a, const wtree::DecoratedTree& b, const std::vector<int>& map);

/// Some automorphism reverses an odd number of cyclic orders.
bool brute_two_torsion(const wtree::DecoratedTree& t);

/// Sign s with a = s * b under AS, or nullopt when the trees are not
/// isomorphic. For two-torsion trees both signs occur; +1 is preferred.
std::optional<int> brute_relative_sign(const wtree::DecoratedTree& a, const wtree::DecoratedTree& b);

// --- naive enumeration --------------------------------------------------

/// Every undecorated tree of order 0..2 on the standard shapes, with every
/// labelling from 1..m and cyclic orders fixed.
std::vector<wtree::DecoratedTree> raw_trees(int order, int m);

struct ClassCount {
  std::size_t classes = 0;
  std::size_t two_torsion = 0;
};
/// Classes of raw_trees(order, m) modulo isomorphism and AS.
ClassCount naive_class_count(int order, int m);

// --- integer linear algebra ---------------------------------------------

/// Invariant factors from gcds of k x k minors (d_k = D_k / D_{k-1}).
std::vector<std::int64_t> determinantal_factors(const wtree::linalg::DenseMatrix& m);

/// Dimension of the degree-n part of the free Lie algebra on m generators.
std::int64_t necklace_dimension(int m, int n);

// --- random objects -----------------------------------------------------

wtree::RootedTree random_rooted(Rng& rng, int order, int m, int generators = 0);
wtree::DecoratedTree random_tree(Rng& rng, int order, int m, int generators = 0);
wtree::GroupWord random_word(Rng& rng, int generators, int max_length = 3);

struct RawTowerShape {
  int max_disk_order = 2;  // order of the highest Whitney disk bracket
  int unpaired = 3;
  int generators = 2;
};
/// A well-formed raw tower on 2..4 surfaces with random disks, whiskers,
/// orientations and unpaired points.
wtree::RawTower random_raw_tower(Rng& rng, const RawTowerShape& shape = {});

/// Random model of the given order whose points are random trees with
/// random punctures.
wtree::TowerModel random_model(Rng& rng, int order, int m, int points);

/// Model with tau = 0: random IHX triples with random signs, cancelling
/// pairs, and doubled two-torsion trees, all with random punctures.
wtree::TowerModel random_zero_model(Rng& rng, const wtree::RelatorLattice& lattice);

/// Adds a point carrying `tree` with a random marked edge.
int add_random_puncture(Rng& rng, wtree::TowerModel& model, const wtree::SignedTree& tree);

}  // namespace testsupport
