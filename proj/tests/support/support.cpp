#include "support.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "wtree/tree_io.hpp"

namespace testsupport {

using wtree::DecoratedTree;
using wtree::GroupWord;
using wtree::RootedTree;

namespace {

std::vector<int> neighbours(const DecoratedTree& t, int v) {
  std::vector<int> out;
  const auto& vx = t.vertex(v);
  const int degree = vx.is_leaf() ? 1 : 3;
  for (int i = 0; i < degree; ++i) out.push_back(t.other_end(vx.edges[i], v));
  return out;
}

bool same_kind(const DecoratedTree& a, int u, const DecoratedTree& b, int v) {
  return a.vertex(u).label == b.vertex(v).label;
}

}  // namespace

std::vector<std::vector<int>> isomorphisms(const DecoratedTree& a, const DecoratedTree& b) {
  std::vector<std::vector<int>> found;
  const int n = static_cast<int>(a.vertices().size());
  if (n != static_cast<int>(b.vertices().size())) return found;

  std::vector<int> order;
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int w : neighbours(a, v)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == order.size()) {
      found.push_back(map);
      return;
    }
    const int v = order[k];
    std::vector<int> candidates;
    if (parent[v] < 0) {
      candidates.resize(n);
      std::iota(candidates.begin(), candidates.end(), 0);
    } else {
      candidates = neighbours(b, map[parent[v]]);
    }
    for (int c : candidates) {
      if (used[c] || !same_kind(a, v, b, c)) continue;
      map[v] = c;
      used[c] = true;
      extend(k + 1);
      used[c] = false;
      map[v] = -1;
    }
  };
  extend(0);
  return found;
}

int reversed_vertices(const DecoratedTree& a, const DecoratedTree& b, const std::vector<int>& map) {
  int reversed = 0;
  for (int v = 0; v < static_cast<int>(a.vertices().size()); ++v) {
    if (a.vertex(v).is_leaf()) continue;
    std::vector<int> image;
    for (int w : neighbours(a, v)) image.push_back(map[w]);
    const std::vector<int> target = neighbours(b, map[v]);
    bool rotation = false;
    for (int r = 0; r < 3; ++r) {
      if (image[0] == target[r] && image[1] == target[(r + 1) % 3] && image[2] == target[(r + 2) % 3]) {
        rotation = true;
      }
    }
    if (!rotation) ++reversed;
  }
  return reversed;
}

bool brute_two_torsion(const DecoratedTree& t) {
  for (const auto& map : isomorphisms(t, t)) {
    if (reversed_vertices(t, t, map) % 2 == 1) return true;
  }
  return false;
}

std::optional<int> brute_relative_sign(const DecoratedTree& a, const DecoratedTree& b) {
  std::optional<int> sign;
  for (const auto& map : isomorphisms(a, b)) {
    const int s = reversed_vertices(a, b, map) % 2 == 0 ? 1 : -1;
    if (!sign || s == 1) sign = s;
  }
  return sign;
}

std::vector<DecoratedTree> raw_trees(int order, int m) {
  using V = DecoratedTree::Vertex;
  using E = DecoratedTree::Edge;
  std::vector<E> edges;
  std::vector<std::array<int, 3>> trivalent;
  int leaves = order + 2;
  if (order == 0) {
    edges = {E{0, 1, {}}};
  } else if (order == 1) {
    edges = {E{0, 3, {}}, E{1, 3, {}}, E{2, 3, {}}};
    trivalent = {{0, 1, 2}};
  } else if (order == 2) {
    edges = {E{0, 4, {}}, E{1, 4, {}}, E{4, 5, {}}, E{2, 5, {}}, E{3, 5, {}}};
    trivalent = {{0, 1, 2}, {2, 3, 4}};
  } else {
    throw std::invalid_argument("raw_trees covers orders 0..2");
  }
  std::vector<DecoratedTree> out;
  std::vector<int> labels(leaves, 1);
  while (true) {
    std::vector<V> vertices;
    for (int i = 0; i < leaves; ++i) {
      const int e = order == 0 ? 0 : (order == 1 ? i : std::array<int, 4>{0, 1, 3, 4}[i]);
      vertices.push_back(V{labels[i], {e, -1, -1}});
    }
    for (const auto& tri : trivalent) vertices.push_back(V{0, tri});
    out.emplace_back(vertices, edges);
    int k = 0;
    while (k < leaves && labels[k] == m) labels[k++] = 1;
    if (k == leaves) break;
    ++labels[k];
  }
  return out;
}

ClassCount naive_class_count(int order, int m) {
  std::vector<DecoratedTree> reps;
  for (const DecoratedTree& t : raw_trees(order, m)) {
    bool known = false;
    for (const DecoratedTree& r : reps) {
      if (!isomorphisms(t, r).empty()) {
        known = true;
        break;
      }
    }
    if (!known) reps.push_back(t);
  }
  ClassCount c;
  c.classes = reps.size();
  for (const DecoratedTree& r : reps) c.two_torsion += brute_two_torsion(r) ? 1 : 0;
  return c;
}

namespace {

std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void combinations(int n, int k, std::vector<int>& cur, int start, const std::function<void()>& visit) {
  if (static_cast<int>(cur.size()) == k) {
    visit();
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::int64_t> determinantal_factors(const wtree::linalg::DenseMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<std::int64_t> factors;
  std::int64_t previous = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::int64_t g = 0;
    std::vector<int> r, c;
    combinations(rows, k, r, 0, [&] {
      combinations(cols, k, c, 0, [&] {
        std::vector<std::vector<std::int64_t>> sub(k, std::vector<std::int64_t>(k));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        }
        g = std::gcd(g, bareiss_det(sub));
      });
    });
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

std::int64_t necklace_dimension(int m, int n) {
  auto mobius = [](int d) {
    int result = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        result = -result;
      }
    }
    return d > 1 ? -result : result;
  };
  std::int64_t sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::int64_t power = 1;
    for (int i = 0; i < n / d; ++i) power *= m;
    sum += mobius(d) * power;
  }
  return sum / n;
}

GroupWord random_word(Rng& rng, int generators, int max_length) {
  if (generators == 0) return {};
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> letter(1, generators);
  std::vector<int> letters;
  const int n = length(rng);
  for (int i = 0; i < n; ++i) letters.push_back(rng() % 2 ? letter(rng) : -letter(rng));
  return GroupWord::from_letters(letters);
}

RootedTree random_rooted(Rng& rng, int order, int m, int generators) {
  if (order == 0) {
    return RootedTree::leaf(std::uniform_int_distribution<int>(1, m)(rng), random_word(rng, generators));
  }
  const int left = std::uniform_int_distribution<int>(0, order - 1)(rng);
  return RootedTree::product(random_rooted(rng, left, m, generators),
                             random_rooted(rng, order - 1 - left, m, generators))
      .with_word(random_word(rng, generators));
}

DecoratedTree random_tree(Rng& rng, int order, int m, int generators) {
  const int left = std::uniform_int_distribution<int>(0, order)(rng);
  return wtree::inner_product(random_rooted(rng, left, m, generators),
                              random_rooted(rng, order - left, m, generators), random_word(rng, generators));
}

wtree::RawTower random_raw_tower(Rng& rng, const RawTowerShape& shape) {
  wtree::RawTower raw;
  raw.m = std::uniform_int_distribution<int>(2, 4)(rng);
  raw.generators = shape.generators;
  auto sign = [&] { return rng() % 2 ? 1 : -1; };
  if (rng() % 3 == 0) {
    for (int i = 0; i < raw.m; ++i) raw.surface_orientations.push_back(sign());
  }
  std::vector<RootedTree> surfaces;
  std::set<std::string> known;
  for (int i = 1; i <= raw.m; ++i) surfaces.push_back(RootedTree::leaf(i));
  auto pick = [&] { return surfaces[rng() % surfaces.size()]; };

  const int disks = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int k = 0; k < disks; ++k) {
    const RootedTree a = pick();
    const RootedTree b = pick();
    const RootedTree bracket = RootedTree::product(a, b);
    if (bracket.order() > shape.max_disk_order || !known.insert(wtree::to_string(bracket)).second) continue;
    raw.disks.push_back({bracket, random_word(rng, raw.generators), sign()});
    const int s = sign();
    for (int t : {s, -s}) {
      const bool swap = rng() % 2;
      raw.points.push_back({swap ? b : a, swap ? a : b, t, random_word(rng, raw.generators), bracket});
    }
    surfaces.push_back(bracket);
  }
  const int unpaired = std::uniform_int_distribution<int>(1, shape.unpaired)(rng);
  for (int k = 0; k < unpaired; ++k) {
    raw.points.push_back({pick(), pick(), sign(), random_word(rng, raw.generators), std::nullopt});
  }
  std::shuffle(raw.points.begin(), raw.points.end(), rng);
  return raw;
}

int add_random_puncture(Rng& rng, wtree::TowerModel& model, const wtree::SignedTree& tree) {
  const int edge = std::uniform_int_distribution<int>(0, tree.tree.edge_count() - 1)(rng);
  return model.add_point(tree, edge);
}

wtree::TowerModel random_model(Rng& rng, int order, int m, int points) {
  wtree::TowerModel model(wtree::Context{m, 0}, order);
  for (int k = 0; k < points; ++k) {
    const int extra = (order < 4 && rng() % 5 == 0) ? 1 : 0;
    add_random_puncture(rng, model, {rng() % 2 ? 1 : -1, random_tree(rng, order + extra, m)});
  }
  return model;
}

namespace {

// Same tree presented differently: a random vertex flip absorbed in the sign.
wtree::SignedTree regauge(Rng& rng, const wtree::SignedTree& t) {
  std::vector<int> trivalent;
  for (int v = 0; v < static_cast<int>(t.tree.vertices().size()); ++v) {
    if (!t.tree.vertex(v).is_leaf()) trivalent.push_back(v);
  }
  if (trivalent.empty() || rng() % 2 == 0) return t;
  return {-t.sign, t.tree.flip_vertex(trivalent[rng() % trivalent.size()])};
}

}  // namespace

wtree::TowerModel random_zero_model(Rng& rng, const wtree::RelatorLattice& lattice) {
  const int n = lattice.order();
  wtree::TowerModel model(wtree::Context{lattice.labels(), 0}, n);
  std::vector<wtree::SignedTree> points;
  auto sign = [&] { return rng() % 2 ? 1 : -1; };
  const auto& basis = lattice.basis();
  const auto& relators = lattice.relators();
  do {
    const int triples = relators.empty() ? 0 : std::uniform_int_distribution<int>(0, 3)(rng);
    for (int k = 0; k < triples; ++k) {
      const wtree::IhxTriple& t = relators[rng() % relators.size()].triple;
      const int s = sign();
      points.push_back(regauge(rng, {s, t.i_tree()}));
      points.push_back(regauge(rng, {-s, t.h_tree()}));
      points.push_back(regauge(rng, {s, t.x_tree()}));
    }
    const int pairs = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int k = 0; k < pairs; ++k) {
      const wtree::CanonicalTree& c = basis[rng() % basis.size()];
      const int s = sign();
      points.push_back(regauge(rng, {s, c.tree()}));
      // A two-torsion tree also cancels against a copy of the same sign.
      const int other = c.two_torsion() && rng() % 2 ? s : -s;
      points.push_back(regauge(rng, {other, c.tree()}));
    }
  } while (points.empty());
  std::shuffle(points.begin(), points.end(), rng);
  for (const auto& p : points) add_random_puncture(rng, model, p);
  return model;
}

}  // namespace testsupport
