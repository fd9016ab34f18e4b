#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wtree/canonical.hpp"
#include "wtree/tree_group.hpp"
#include "wtree/tree_sum.hpp"

namespace wtree {

/// Nonassociative bracketing of surface labels. Brackets are undecorated
/// rooted trees; whiskers and orientations live on the disks.
using Bracket = RootedTree;

RootedTree tree_of_bracket(const Bracket& bracket);

// ---------------------------------------------------------------------------
// Raw towers

struct RawDisk {
  Bracket bracket;
  GroupWord whisker;
  int orientation = 1;
};

struct RawPoint {
  Bracket left;
  Bracket right;
  int sign = 1;
  GroupWord g;
  std::optional<Bracket> paired_by;
};

/// Description of a Whitney tower as disks and intersection points. Signs are
/// taken relative to the current orientations of the surfaces involved.
struct RawTower {
  int m = 1;
  std::optional<int> order;
  int generators = 0;
  std::vector<RawDisk> disks;
  std::vector<RawPoint> points;
  /// Orientations of the order-0 surfaces A_1..A_m; empty means all +1.
  std::vector<int> surface_orientations;
};

class MalformedTower : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws MalformedTower naming the offending disk or point.
void validate(const RawTower& raw);

/// Signed tree of a raw point, before canonicalization. The fused edge is
/// edge 0.
SignedTree point_tree(const RawTower& raw, std::size_t point);

/// Reorients W_K: the vertex of K and the signs of the points on W_K change.
RawTower flip_disk_orientation(const RawTower& raw, std::size_t disk);
RawTower change_whisker(const RawTower& raw, std::size_t disk, const GroupWord& h);
/// Describes the point from the other sheet: left and right swap, g inverts.
RawTower reverse_point(const RawTower& raw, std::size_t point);
/// Reorients A_i and the signs of the points on it.
RawTower flip_surface_orientation(const RawTower& raw, int label);

// ---------------------------------------------------------------------------
// Split tower model

struct TowerPoint {
  int id = 0;
  int sign = 1;
  CanonicalTree tree;
  /// Edge of tree.tree() carrying the puncture.
  EdgeId puncture = 0;

  PuncturedTree punctured() const { return {SignedTree{sign, tree.tree()}, puncture}; }
};

class TowerModel {
 public:
  explicit TowerModel(Context ctx = {}, int declared_order = 0);

  const Context& context() const { return ctx_; }
  int m() const { return ctx_.labels; }
  int declared_order() const { return order_; }
  const std::vector<TowerPoint>& points() const { return points_; }
  int next_id() const { return next_id_; }
  bool contains(int id) const;
  /// Throws MoveError(UnknownPoint).
  const TowerPoint& point(int id) const;

  /// Adds a point with the given marked edge of `tree.tree` and returns its id.
  /// Throws std::invalid_argument if the tree's order is below the declared
  /// order, or ContextMismatch for labels or letters outside the context.
  int add_point(const SignedTree& tree, EdgeId marked_edge = 0);
  /// Same for a tree already in canonical form; `puncture` is an edge of
  /// tree.tree().
  int add_point(int sign, const CanonicalTree& tree, EdgeId puncture);
  void remove_point(int id);
  void set_puncture(int id, EdgeId edge);
  void set_declared_order(int order);

  friend bool operator==(const TowerModel& a, const TowerModel& b);

 private:
  Context ctx_;
  int order_;
  int next_id_ = 0;
  std::vector<TowerPoint> points_;
};

TowerModel extract_model(const RawTower& raw);

/// Signed sum over the points of exactly the declared order. Its class in
/// T_n is tau; as a sum of canonical trees it is the IHX-free lift hat_tau.
TreeSum tau(const TowerModel& model);
inline TreeSum hat_tau(const TowerModel& model) { return tau(model); }

class MoveError : public std::invalid_argument {
 public:
  enum class Kind {
    UnknownPoint,
    UnknownEdge,
    SamePoint,
    NotSimple,
    TreeMismatch,
    SignMismatch,
    OrderMismatch,
    MalformedTriple,
    NotInterior,
    FlipNotAllowed,
  };
  MoveError(Kind kind, const std::string& detail);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};
std::string to_string(MoveError::Kind kind);

/// Edges crossed when sliding a puncture from one edge to another; each
/// consecutive pair shares a trivalent vertex.
std::vector<EdgeId> puncture_path(const DecoratedTree& tree, EdgeId from, EdgeId to);

TowerModel move_puncture(const TowerModel& model, int point, EdgeId target_edge);
/// Adds sign*(+I, -H, +X), each punctured at its fused edge.
TowerModel ihx_insert(const TowerModel& model, const IhxTriple& triple, int sign);
/// Replaces the point by the two trees of I = H - X at an interior edge,
/// punctured at that edge. `flip` first uses t = -t, which is only allowed
/// for two-torsion trees.
TowerModel ihx_split(const TowerModel& model, int point, EdgeId edge, bool flip = false);
/// Removes two simple points carrying the same tree with opposite signs (any
/// signs for a two-torsion tree).
TowerModel cancel_simple_pair(const TowerModel& model, int p, int q);
/// Union with every sign of `b` negated; b's points are renumbered after a's.
TowerModel glue(const TowerModel& a, const TowerModel& b);
TowerModel bch_tower(const std::vector<SignedTree>& sigma, int order, int m);

// ---------------------------------------------------------------------------
// Certificates

struct IhxInsertMove {
  IhxTriple triple;
  int sign = 1;
};
struct IhxSplitMove {
  int point = 0;
  EdgeId edge = 0;
  bool flip = false;
};
struct PunctureMove {
  int point = 0;
  EdgeId edge = 0;
};
struct CancelPairMove {
  int p = 0;
  int q = 0;
};
using Move = std::variant<IhxInsertMove, IhxSplitMove, PunctureMove, CancelPairMove>;

struct MoveCertificate {
  std::vector<Move> moves;
};

TowerModel apply_move(const TowerModel& model, const Move& move);

class ObstructionNonzero : public std::runtime_error {
 public:
  explicit ObstructionNonzero(TreeSum normal_form);
  const TreeSum& normal_form() const { return normal_form_; }

 private:
  TreeSum normal_form_;
};

struct PlannerOptions {
  EnumerationBounds bounds;
  /// Reused when its order and labels match the model. Must track
  /// provenance for planning.
  const RelatorLattice* lattice = nullptr;
};

/// Moves that remove every point of the declared order. Throws
/// ObstructionNonzero when tau is nonzero in T_n, std::invalid_argument for
/// decorated points.
MoveCertificate certify_raise_order(const TowerModel& model, const PlannerOptions& opts = {});

struct Verification {
  bool ok = false;
  std::string reason;
  std::optional<TowerModel> final_model;  // declared order raised by one
};
Verification verify_certificate(const TowerModel& model, const MoveCertificate& cert,
                                const PlannerOptions& opts = {});

}  // namespace wtree
