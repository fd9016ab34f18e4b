#include "wtree/tower.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <set>

#include "wtree/tree_io.hpp"

namespace wtree {

RootedTree tree_of_bracket(const Bracket& bracket) {
  if (bracket.has_decorations()) throw std::invalid_argument("brackets carry no decorations");
  return bracket;
}

// ---------------------------------------------------------------------------
// Raw towers

namespace {

std::string key(const Bracket& b) { return to_string(b); }

int point_order(const RawPoint& p) { return p.left.order() + p.right.order(); }

class RawView {
 public:
  explicit RawView(const RawTower& raw) : raw_(raw) {
    for (std::size_t i = 0; i < raw.disks.size(); ++i) disks_.emplace(key(raw.disks[i].bracket), i);
  }

  const RawDisk* disk(const Bracket& b) const {
    auto it = disks_.find(key(b));
    return it == disks_.end() ? nullptr : &raw_.disks[it->second];
  }

  int orientation(const Bracket& b) const {
    if (b.is_leaf()) {
      return raw_.surface_orientations.empty() ? 1 : raw_.surface_orientations.at(b.label() - 1);
    }
    return disk(b)->orientation;
  }

  // t(K) with the vertex of every disk oriented relative to its two sheets
  // and its whisker applied by HOL at that vertex.
  RootedTree surface_tree(const Bracket& b) const {
    if (b.is_leaf()) return RootedTree::leaf(b.label());
    const RawDisk* d = disk(b);
    if (d == nullptr) throw MalformedTower("no disk for surface " + key(b));
    RootedTree left = surface_tree(b.left());
    RootedTree right = surface_tree(b.right());
    if (d->orientation * orientation(b.left()) * orientation(b.right()) < 0) std::swap(left, right);
    const GroupWord& h = d->whisker;
    left = left.with_word(h * left.word());
    right = right.with_word(h * right.word());
    return RootedTree::product(left, right).with_word(h.inverse());
  }

 private:
  const RawTower& raw_;
  std::map<std::string, std::size_t> disks_;
};

bool labels_in_range(const Bracket& b, int m) {
  for (int label : b.labels()) {
    if (label < 1 || label > m) return false;
  }
  return true;
}

bool letters_in_range(const GroupWord& w, int generators) { return w.max_generator() <= generators; }

std::string describe(const RawPoint& p, std::size_t i) {
  return "point " + std::to_string(i) + " (" + key(p.left) + " x " + key(p.right) + ")";
}

}  // namespace

void validate(const RawTower& raw) {
  if (raw.m < 1) throw MalformedTower("m must be positive");
  if (raw.generators < 0) throw MalformedTower("generators must be nonnegative");
  if (!raw.surface_orientations.empty()) {
    if (static_cast<int>(raw.surface_orientations.size()) != raw.m) {
      throw MalformedTower("surface_orientations needs one entry per surface");
    }
    for (int o : raw.surface_orientations) {
      if (o != 1 && o != -1) throw MalformedTower("surface orientation must be +1 or -1");
    }
  }
  RawView view(raw);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < raw.disks.size(); ++i) {
    const RawDisk& d = raw.disks[i];
    const std::string name = "disk " + std::to_string(i) + " " + key(d.bracket);
    if (d.bracket.is_leaf()) throw MalformedTower(name + ": a Whitney disk needs a bracket (I,J)");
    if (d.bracket.has_decorations()) throw MalformedTower(name + ": brackets carry no decorations");
    if (!labels_in_range(d.bracket, raw.m)) throw MalformedTower(name + ": label out of range");
    if (!seen.insert(key(d.bracket)).second) throw MalformedTower(name + ": duplicate disk");
    if (d.orientation != 1 && d.orientation != -1) throw MalformedTower(name + ": orientation must be +1 or -1");
    if (!letters_in_range(d.whisker, raw.generators)) throw MalformedTower(name + ": unknown whisker letter");
    for (const Bracket& side : {d.bracket.left(), d.bracket.right()}) {
      if (!side.is_leaf() && view.disk(side) == nullptr) {
        throw MalformedTower(name + ": surface " + key(side) + " is missing");
      }
    }
  }
  std::map<std::string, std::vector<std::size_t>> paired;
  for (std::size_t i = 0; i < raw.points.size(); ++i) {
    const RawPoint& p = raw.points[i];
    const std::string name = describe(p, i);
    if (p.sign != 1 && p.sign != -1) throw MalformedTower(name + ": sign must be +1 or -1");
    if (!letters_in_range(p.g, raw.generators)) throw MalformedTower(name + ": unknown group letter");
    for (const Bracket& side : {p.left, p.right}) {
      if (side.has_decorations()) throw MalformedTower(name + ": brackets carry no decorations");
      if (!labels_in_range(side, raw.m)) throw MalformedTower(name + ": label out of range");
      if (!side.is_leaf() && view.disk(side) == nullptr) {
        throw MalformedTower(name + ": surface " + key(side) + " is missing");
      }
    }
    if (p.paired_by) {
      if (view.disk(*p.paired_by) == nullptr) {
        throw MalformedTower(name + ": paired by missing disk " + key(*p.paired_by));
      }
      paired[key(*p.paired_by)].push_back(i);
    }
  }
  for (std::size_t i = 0; i < raw.disks.size(); ++i) {
    const RawDisk& d = raw.disks[i];
    const std::string name = "disk " + std::to_string(i) + " " + key(d.bracket);
    const std::vector<std::size_t>& pts = paired[key(d.bracket)];
    if (pts.size() != 2) {
      throw MalformedTower(name + ": pairs " + std::to_string(pts.size()) + " points, expected 2");
    }
    const RawPoint& a = raw.points[pts[0]];
    const RawPoint& b = raw.points[pts[1]];
    if (point_order(a) != point_order(b)) {
      throw MalformedTower(name + ": pairs points of different order (" + std::to_string(point_order(a)) + " and " +
                           std::to_string(point_order(b)) + ")");
    }
    if (a.sign == b.sign) throw MalformedTower(name + ": pairs points of equal sign");
    const std::set<std::string> sheets{key(d.bracket.left()), key(d.bracket.right())};
    for (std::size_t k : pts) {
      const RawPoint& p = raw.points[k];
      if (std::set<std::string>{key(p.left), key(p.right)} != sheets ||
          (key(p.left) == key(p.right)) != (sheets.size() == 1)) {
        throw MalformedTower(name + ": " + describe(p, k) + " does not lie on its two sheets");
      }
    }
  }
  if (raw.order) {
    for (std::size_t i = 0; i < raw.points.size(); ++i) {
      const RawPoint& p = raw.points[i];
      if (!p.paired_by && point_order(p) < *raw.order) {
        throw MalformedTower(describe(p, i) + ": unpaired point of order " + std::to_string(point_order(p)) +
                             " in an order-" + std::to_string(*raw.order) + " tower");
      }
    }
  }
}

SignedTree point_tree(const RawTower& raw, std::size_t point) {
  const RawView view(raw);
  const RawPoint& p = raw.points.at(point);
  return {p.sign, inner_product(view.surface_tree(p.left), view.surface_tree(p.right), p.g)};
}

namespace {

void negate_points_on(RawTower& raw, const Bracket& surface) {
  const std::string k = key(surface);
  for (RawPoint& p : raw.points) {
    if (key(p.left) == k) p.sign = -p.sign;
    if (key(p.right) == k) p.sign = -p.sign;
  }
}

}  // namespace

RawTower flip_disk_orientation(const RawTower& raw, std::size_t disk) {
  RawTower out = raw;
  RawDisk& d = out.disks.at(disk);
  d.orientation = -d.orientation;
  negate_points_on(out, d.bracket);
  return out;
}

RawTower change_whisker(const RawTower& raw, std::size_t disk, const GroupWord& h) {
  RawTower out = raw;
  RawDisk& d = out.disks.at(disk);
  d.whisker = h * d.whisker;
  return out;
}

RawTower reverse_point(const RawTower& raw, std::size_t point) {
  RawTower out = raw;
  RawPoint& p = out.points.at(point);
  std::swap(p.left, p.right);
  p.g = p.g.inverse();
  return out;
}

RawTower flip_surface_orientation(const RawTower& raw, int label) {
  if (label < 1 || label > raw.m) throw std::invalid_argument("label out of range");
  RawTower out = raw;
  if (out.surface_orientations.empty()) out.surface_orientations.assign(raw.m, 1);
  out.surface_orientations[label - 1] = -out.surface_orientations[label - 1];
  negate_points_on(out, RootedTree::leaf(label));
  return out;
}

// ---------------------------------------------------------------------------
// Model

TowerModel::TowerModel(Context ctx, int declared_order) : ctx_(ctx), order_(declared_order) {
  if (ctx.labels < 1) throw std::invalid_argument("a tower needs at least one surface");
  if (declared_order < 0) throw std::invalid_argument("declared order must be nonnegative");
}

bool TowerModel::contains(int id) const {
  return std::any_of(points_.begin(), points_.end(), [id](const TowerPoint& p) { return p.id == id; });
}

const TowerPoint& TowerModel::point(int id) const {
  for (const TowerPoint& p : points_) {
    if (p.id == id) return p;
  }
  throw MoveError(MoveError::Kind::UnknownPoint, "no point with id " + std::to_string(id));
}

int TowerModel::add_point(const SignedTree& tree, EdgeId marked_edge) {
  if (marked_edge < 0 || marked_edge >= tree.tree.edge_count()) {
    throw MoveError(MoveError::Kind::UnknownEdge, "marked edge " + std::to_string(marked_edge) + " out of range");
  }
  const Canonicalized c = canonicalize(tree);
  return add_point(c.sign, c.tree, c.edge_map[marked_edge]);
}

int TowerModel::add_point(int sign, const CanonicalTree& tree, EdgeId puncture) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (tree.order() < order_) {
    throw std::invalid_argument("tree " + tree.code() + " has order " + std::to_string(tree.order()) +
                                " below the declared order " + std::to_string(order_));
  }
  for (int label : tree.labels()) {
    if (label > ctx_.labels) throw ContextMismatch("label " + std::to_string(label) + " outside 1.." + std::to_string(ctx_.labels));
  }
  if (tree.max_generator() > ctx_.generators) throw ContextMismatch("group letter outside the alphabet");
  if (puncture < 0 || puncture >= 2 * tree.order() + 1) {
    throw MoveError(MoveError::Kind::UnknownEdge, "puncture " + std::to_string(puncture) + " out of range");
  }
  points_.push_back({next_id_, sign, tree, puncture});
  return next_id_++;
}

void TowerModel::remove_point(int id) {
  auto it = std::find_if(points_.begin(), points_.end(), [id](const TowerPoint& p) { return p.id == id; });
  if (it == points_.end()) throw MoveError(MoveError::Kind::UnknownPoint, "no point with id " + std::to_string(id));
  points_.erase(it);
}

void TowerModel::set_puncture(int id, EdgeId edge) {
  for (TowerPoint& p : points_) {
    if (p.id != id) continue;
    if (edge < 0 || edge >= 2 * p.tree.order() + 1) {
      throw MoveError(MoveError::Kind::UnknownEdge, "edge " + std::to_string(edge) + " not in point " + std::to_string(id));
    }
    p.puncture = edge;
    return;
  }
  throw MoveError(MoveError::Kind::UnknownPoint, "no point with id " + std::to_string(id));
}

void TowerModel::set_declared_order(int order) {
  for (const TowerPoint& p : points_) {
    if (p.tree.order() < order) {
      throw std::invalid_argument("point " + std::to_string(p.id) + " has order below " + std::to_string(order));
    }
  }
  order_ = order;
}

bool operator==(const TowerModel& a, const TowerModel& b) {
  if (!(a.ctx_ == b.ctx_) || a.order_ != b.order_ || a.points_.size() != b.points_.size()) return false;
  for (std::size_t i = 0; i < a.points_.size(); ++i) {
    const TowerPoint& p = a.points_[i];
    const TowerPoint& q = b.points_[i];
    if (p.id != q.id || p.sign != q.sign || p.tree != q.tree || p.puncture != q.puncture) return false;
  }
  return true;
}

TowerModel extract_model(const RawTower& raw) {
  validate(raw);
  int order = raw.order.value_or(-1);
  if (!raw.order) {
    for (const RawPoint& p : raw.points) {
      if (!p.paired_by && (order < 0 || point_order(p) < order)) order = point_order(p);
    }
    order = std::max(order, 0);
  }
  TowerModel model(Context{raw.m, raw.generators}, order);
  for (std::size_t i = 0; i < raw.points.size(); ++i) {
    if (!raw.points[i].paired_by) model.add_point(point_tree(raw, i), 0);
  }
  return model;
}

TreeSum tau(const TowerModel& model) {
  TreeSum out(model.context());
  for (const TowerPoint& p : model.points()) {
    if (p.tree.order() == model.declared_order()) out.add(p.tree, p.sign);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Moves

std::string to_string(MoveError::Kind kind) {
  switch (kind) {
    case MoveError::Kind::UnknownPoint: return "UnknownPoint";
    case MoveError::Kind::UnknownEdge: return "UnknownEdge";
    case MoveError::Kind::SamePoint: return "SamePoint";
    case MoveError::Kind::NotSimple: return "NotSimple";
    case MoveError::Kind::TreeMismatch: return "TreeMismatch";
    case MoveError::Kind::SignMismatch: return "SignMismatch";
    case MoveError::Kind::OrderMismatch: return "OrderMismatch";
    case MoveError::Kind::MalformedTriple: return "MalformedTriple";
    case MoveError::Kind::NotInterior: return "NotInterior";
    case MoveError::Kind::FlipNotAllowed: return "FlipNotAllowed";
  }
  return "Unknown";
}

MoveError::MoveError(Kind kind, const std::string& detail)
    : std::invalid_argument(to_string(kind) + ": " + detail), kind_(kind) {}

std::vector<EdgeId> puncture_path(const DecoratedTree& tree, EdgeId from, EdgeId to) {
  const int edges = tree.edge_count();
  if (from < 0 || from >= edges || to < 0 || to >= edges) {
    throw MoveError(MoveError::Kind::UnknownEdge, "edge out of range");
  }
  std::vector<EdgeId> previous(edges, -2);
  std::deque<EdgeId> queue{from};
  previous[from] = -1;
  while (!queue.empty()) {
    const EdgeId e = queue.front();
    queue.pop_front();
    if (e == to) break;
    for (VertexId v : {tree.edge(e).tail, tree.edge(e).head}) {
      if (tree.vertex(v).is_leaf()) continue;
      for (EdgeId f : tree.vertex(v).edges) {
        if (previous[f] != -2) continue;
        previous[f] = e;
        queue.push_back(f);
      }
    }
  }
  std::vector<EdgeId> path;
  for (EdgeId e = to; e != -1; e = previous[e]) path.push_back(e);
  std::reverse(path.begin(), path.end());
  return path;
}

TowerModel move_puncture(const TowerModel& model, int point, EdgeId target_edge) {
  const TowerPoint& p = model.point(point);
  if (target_edge < 0 || target_edge >= 2 * p.tree.order() + 1) {
    throw MoveError(MoveError::Kind::UnknownEdge, "edge " + std::to_string(target_edge) + " not in point " +
                                                      std::to_string(point));
  }
  TowerModel out = model;
  out.set_puncture(point, target_edge);
  return out;
}

TowerModel ihx_insert(const TowerModel& model, const IhxTriple& triple, int sign) {
  if (sign != 1 && sign != -1) throw MoveError(MoveError::Kind::MalformedTriple, "sign must be +1 or -1");
  if (triple.order() != model.declared_order()) {
    throw MoveError(MoveError::Kind::OrderMismatch, "triple of order " + std::to_string(triple.order()) +
                                                        " in an order-" + std::to_string(model.declared_order()) +
                                                        " model");
  }
  TowerModel out = model;
  out.add_point(SignedTree{sign, triple.i_tree()}, 0);
  out.add_point(SignedTree{-sign, triple.h_tree()}, 0);
  out.add_point(SignedTree{sign, triple.x_tree()}, 0);
  return out;
}

TowerModel ihx_split(const TowerModel& model, int point, EdgeId edge, bool flip) {
  const TowerPoint& p = model.point(point);
  const DecoratedTree tree = p.tree.tree();
  if (edge < 0 || edge >= tree.edge_count()) {
    throw MoveError(MoveError::Kind::UnknownEdge, "edge " + std::to_string(edge) + " not in point " +
                                                      std::to_string(point));
  }
  if (!tree.is_interior(edge)) {
    throw MoveError(MoveError::Kind::NotInterior, "edge " + std::to_string(edge) + " of point " +
                                                      std::to_string(point) + " is not interior");
  }
  if (flip && !p.tree.two_torsion()) {
    throw MoveError(MoveError::Kind::FlipNotAllowed, "point " + std::to_string(point) + " is not two-torsion");
  }
  const IhxTriple triple = ihx_triple_at(tree, edge);
  const int sign = flip ? -p.sign : p.sign;
  TowerModel out = model;
  out.remove_point(point);
  out.add_point(SignedTree{sign, triple.h_tree()}, 0);
  out.add_point(SignedTree{-sign, triple.x_tree()}, 0);
  return out;
}

TowerModel cancel_simple_pair(const TowerModel& model, int p, int q) {
  if (p == q) throw MoveError(MoveError::Kind::SamePoint, "point " + std::to_string(p) + " twice");
  const TowerPoint& a = model.point(p);
  const TowerPoint& b = model.point(q);
  for (const TowerPoint* x : {&a, &b}) {
    if (x->tree.order() != model.declared_order()) {
      throw MoveError(MoveError::Kind::OrderMismatch, "point " + std::to_string(x->id) + " has order " +
                                                          std::to_string(x->tree.order()));
    }
    if (!is_simple(x->tree.tree())) {
      throw MoveError(MoveError::Kind::NotSimple, "point " + std::to_string(x->id) + " carries " + x->tree.code());
    }
  }
  if (a.tree != b.tree) {
    throw MoveError(MoveError::Kind::TreeMismatch, a.tree.code() + " vs " + b.tree.code());
  }
  if (a.sign == b.sign && !a.tree.two_torsion()) {
    throw MoveError(MoveError::Kind::SignMismatch, "points " + std::to_string(p) + " and " + std::to_string(q) +
                                                       " have the same sign");
  }
  TowerModel out = model;
  out.remove_point(p);
  out.remove_point(q);
  return out;
}

TowerModel glue(const TowerModel& a, const TowerModel& b) {
  if (!(a.context() == b.context())) throw ContextMismatch("glued towers need the same surfaces and alphabet");
  if (a.declared_order() != b.declared_order()) throw ContextMismatch("glued towers need the same order");
  TowerModel out = a;
  for (const TowerPoint& p : b.points()) out.add_point(-p.sign, p.tree, p.puncture);
  return out;
}

TowerModel bch_tower(const std::vector<SignedTree>& sigma, int order, int m) {
  int generators = 0;
  for (const SignedTree& s : sigma) {
    if (s.tree.order() != order) {
      throw std::invalid_argument("tree of order " + std::to_string(s.tree.order()) + " in an order-" +
                                  std::to_string(order) + " tower");
    }
    for (const DecoratedTree::Edge& e : s.tree.edges()) generators = std::max(generators, e.word.max_generator());
  }
  TowerModel out(Context{m, generators}, order);
  for (const SignedTree& s : sigma) {
    const Canonicalized c = canonicalize(s);
    out.add_point(c.sign, c.tree, 0);
  }
  return out;
}

TowerModel apply_move(const TowerModel& model, const Move& move) {
  return std::visit(
      [&](const auto& mv) -> TowerModel {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, IhxInsertMove>) return ihx_insert(model, mv.triple, mv.sign);
        if constexpr (std::is_same_v<T, IhxSplitMove>) return ihx_split(model, mv.point, mv.edge, mv.flip);
        if constexpr (std::is_same_v<T, PunctureMove>) return move_puncture(model, mv.point, mv.edge);
        if constexpr (std::is_same_v<T, CancelPairMove>) return cancel_simple_pair(model, mv.p, mv.q);
      },
      move);
}

// ---------------------------------------------------------------------------
// Planner

ObstructionNonzero::ObstructionNonzero(TreeSum normal_form)
    : std::runtime_error("tau is nonzero: " + normal_form.to_string()), normal_form_(std::move(normal_form)) {}

namespace {

// Lattice for the model, borrowed from the options when it fits.
class LatticeRef {
 public:
  LatticeRef(const TowerModel& model, const PlannerOptions& opts, bool track) : model_(model), opts_(opts), track_(track) {}

  const RelatorLattice& get() {
    const RelatorLattice* given = opts_.lattice;
    if (given != nullptr && given->order() == model_.declared_order() && given->labels() == model_.m() &&
        (!track_ || given->lattice().tracks_provenance())) {
      return *given;
    }
    if (!owned_) {
      owned_ = std::make_unique<RelatorLattice>(model_.declared_order(), model_.m(), GroupOptions{opts_.bounds, false},
                                                track_);
    }
    return *owned_;
  }

 private:
  const TowerModel& model_;
  const PlannerOptions& opts_;
  bool track_;
  std::unique_ptr<RelatorLattice> owned_;
};

std::vector<const TowerPoint*> top_points(const TowerModel& model) {
  std::vector<const TowerPoint*> out;
  for (const TowerPoint& p : model.points()) {
    if (p.tree.order() == model.declared_order()) out.push_back(&p);
  }
  return out;
}

}  // namespace

MoveCertificate certify_raise_order(const TowerModel& model, const PlannerOptions& opts) {
  for (const TowerPoint* p : top_points(model)) {
    if (p->tree.decorated()) throw std::invalid_argument("planning needs trivial decorations (point " + std::to_string(p->id) + ")");
  }
  MoveCertificate cert;
  TowerModel state = model;
  auto push = [&](Move move) {
    state = apply_move(state, move);
    cert.moves.push_back(std::move(move));
  };

  const TreeSum initial = tau(model);
  if (!initial.empty()) {
    LatticeRef lattice(model, opts, true);
    const RelatorLattice& lat = lattice.get();
    const auto combination = lat.relator_combination(initial);
    if (!combination) throw ObstructionNonzero(lat.normal_form(initial));
    for (const auto& [k, c] : combination.value()) {
      const int sign = c > 0 ? -1 : 1;
      for (linalg::Int i = 0; i < (c > 0 ? c : -c); ++i) push(IhxInsertMove{lat.relators()[k].triple, sign});
    }
    if (!tau(state).empty()) throw std::logic_error("relator insertion left " + tau(state).to_string());
  }

  // Split every non-simple tree until only simple trees remain; each batch
  // splits all copies of one tree at the same edge, so cancellation persists.
  for (int round = 0;; ++round) {
    if (round > 100000) throw std::logic_error("simple-tree reduction did not terminate");
    const CanonicalTree* target = nullptr;
    for (const TowerPoint* p : top_points(state)) {
      if (is_simple(p->tree.tree())) continue;
      if (target == nullptr || p->tree < *target) target = &p->tree;
    }
    if (target == nullptr) break;
    const CanonicalTree tree = *target;
    const EdgeId edge = simplifying_edge(tree.tree());
    std::vector<std::pair<int, int>> batch;  // (id, sign)
    for (const TowerPoint* p : top_points(state)) {
      if (p->tree == tree) batch.emplace_back(p->id, p->sign);
    }
    for (std::size_t k = 0; k < batch.size(); ++k) {
      const bool flip = tree.two_torsion() && batch[k].second != (k % 2 == 0 ? 1 : -1);
      push(IhxSplitMove{batch[k].first, edge, flip});
    }
  }

  std::map<CanonicalTree, std::vector<std::pair<int, int>>> groups;
  for (const TowerPoint* p : top_points(state)) groups[p->tree].emplace_back(p->id, p->sign);
  for (const auto& [tree, members] : groups) {
    std::vector<std::pair<int, int>> pairs;
    if (tree.two_torsion()) {
      for (std::size_t k = 0; k + 1 < members.size(); k += 2) pairs.emplace_back(members[k].first, members[k + 1].first);
    } else {
      std::vector<int> plus, minus;
      for (const auto& [id, sign] : members) (sign > 0 ? plus : minus).push_back(id);
      for (std::size_t k = 0; k < std::min(plus.size(), minus.size()); ++k) pairs.emplace_back(plus[k], minus[k]);
    }
    for (const auto& [p, q] : pairs) {
      const EdgeId target = state.point(p).puncture;
      if (state.point(q).puncture != target) push(PunctureMove{q, target});
      push(CancelPairMove{p, q});
    }
  }
  if (!top_points(state).empty()) throw std::logic_error("planner left uncancelled points");
  return cert;
}

Verification verify_certificate(const TowerModel& model, const MoveCertificate& cert, const PlannerOptions& opts) {
  LatticeRef lattice(model, opts, false);
  auto vanishes = [&](const TowerModel& m) {
    const TreeSum t = tau(m);
    return t.empty() || lattice.get().is_zero(t);
  };
  Verification out;
  TowerModel state = model;
  bool zero = false;
  try {
    zero = vanishes(state);
  } catch (const std::exception& e) {
    out.reason = std::string("cannot evaluate tau: ") + e.what();
    return out;
  }
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    try {
      state = apply_move(state, cert.moves[i]);
      if (vanishes(state) != zero) {
        out.reason = "move " + std::to_string(i) + " changes whether tau vanishes";
        return out;
      }
    } catch (const std::exception& e) {
      out.reason = "move " + std::to_string(i) + ": " + e.what();
      return out;
    }
  }
  const std::size_t left = top_points(state).size();
  if (left != 0) {
    out.reason = std::to_string(left) + " points of order " + std::to_string(model.declared_order()) + " remain";
    return out;
  }
  state.set_declared_order(model.declared_order() + 1);
  out.ok = true;
  out.final_model = std::move(state);
  return out;
}

}  // namespace wtree
