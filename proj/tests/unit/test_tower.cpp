#include <doctest.h>

#include <fstream>

#include "support.hpp"
#include "wtree/tower.hpp"
#include "wtree/tower_json.hpp"
#include "wtree/tree_io.hpp"

using namespace wtree;
using testsupport::Rng;

namespace {

const Context kCtx{4, 0};

RootedTree R(const char* text) { return parse_rooted(text, Context{6, 2}); }
SignedTree S(const char* text) { return parse_signed(text, Context{6, 2}); }

TreeSum sum_of(std::initializer_list<const char*> trees, int m = 4) {
  TreeSum s(Context{m, 0});
  for (const char* t : trees) s.add(S(t));
  return s;
}

TowerModel model_of(std::initializer_list<const char*> trees, int order, int m = 4) {
  TowerModel model(Context{m, 0}, order);
  for (const char* t : trees) model.add_point(S(t));
  return model;
}

MoveError::Kind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const MoveError& e) {
    return e.kind();
  }
  FAIL("no MoveError thrown");
  return MoveError::Kind::UnknownPoint;
}

RawTower single_point_raw() {
  RawTower raw;
  raw.m = 3;
  raw.generators = 1;
  raw.disks.push_back({R("(1,2)"), {}, 1});
  raw.points.push_back({R("1"), R("2"), 1, {}, R("(1,2)")});
  raw.points.push_back({R("1"), R("2"), -1, {}, R("(1,2)")});
  raw.points.push_back({R("(1,2)"), R("3"), 1, GroupWord::generator(1), std::nullopt});
  return raw;
}

}  // namespace

TEST_SUITE("raw towers") {
  TEST_CASE("brackets") {
    CHECK(tree_of_bracket(R("1")) == RootedTree::leaf(1));
    CHECK(tree_of_bracket(R("((1,2),3)")).order() == 2);
    CHECK(tree_of_bracket(R("((1,2),(3,4))")) == rooted_product(tree_of_bracket(R("(1,2)")), tree_of_bracket(R("(3,4)"))));
    CHECK_THROWS_AS(tree_of_bracket(R("(1:a,2)")), std::invalid_argument);
  }

  TEST_CASE("a single unpaired point") {
    const TowerModel model = extract_model(single_point_raw());
    CHECK(model.declared_order() == 1);
    REQUIRE(model.points().size() == 1);
    TreeSum expected(Context{3, 1});
    expected.add(inner_product(R("(1,2)"), R("3"), GroupWord::generator(1)), 1);
    CHECK(tau(model) == expected);
    CHECK(model.points()[0].puncture == canonicalize(SignedTree{1, inner_product(R("(1,2)"), R("3"), GroupWord::generator(1))}).edge_map[0]);
  }

  TEST_CASE("malformed towers name the culprit") {
    RawTower raw = single_point_raw();
    raw.points[1].left = R("(1,2)");
    raw.points[1].right = R("3");
    CHECK_THROWS_WITH_AS(validate(raw), doctest::Contains("disk 0 (1,2)"), MalformedTower);

    RawTower orders = single_point_raw();
    orders.disks.push_back({R("(2,3)"), {}, 1});
    orders.points.push_back({R("2"), R("3"), 1, {}, R("(2,3)")});
    orders.points.push_back({R("(1,2)"), R("3"), -1, {}, R("(2,3)")});
    CHECK_THROWS_WITH_AS(validate(orders), doctest::Contains("different order"), MalformedTower);

    RawTower missing = single_point_raw();
    missing.disks.push_back({R("((1,3),2)"), {}, 1});
    CHECK_THROWS_WITH_AS(validate(missing), doctest::Contains("(1,3)"), MalformedTower);

    RawTower signs = single_point_raw();
    signs.points[1].sign = 1;
    CHECK_THROWS_WITH_AS(validate(signs), doctest::Contains("equal sign"), MalformedTower);

    RawTower low = single_point_raw();
    low.order = 2;
    CHECK_THROWS_WITH_AS(validate(low), doctest::Contains("point 2"), MalformedTower);

    RawTower letters = single_point_raw();
    letters.generators = 0;
    CHECK_THROWS_AS(validate(letters), MalformedTower);
  }

  TEST_CASE("the two-disk order-2 tower") {
    std::ifstream file(WTREE_FIXTURE_DIR "/two_disk_tower.json");
    REQUIRE(file.good());
    const RawTower raw = raw_from_json(Json::parse(file));
    const TowerModel model = extract_model(raw);
    CHECK(model.declared_order() == 2);
    CHECK(model.points().size() == 1);
    const TreeSum expected = sum_of({"+inner((1,2),(3,4),)"});
    CHECK(tau(model) == expected);
    CHECK(tau(bch_tower({S("+inner((1,2),(3,4),)")}, 2, 4)) == expected);
  }

  TEST_CASE("gauge moves leave tau unchanged") {
    Rng rng(77);
    for (int k = 0; k < 200; ++k) {
      const RawTower raw = testsupport::random_raw_tower(rng);
      const TreeSum base = tau(extract_model(raw));
      if (!raw.disks.empty()) {
        const std::size_t d = rng() % raw.disks.size();
        CHECK(tau(extract_model(flip_disk_orientation(raw, d))) == base);
        CHECK(tau(extract_model(change_whisker(raw, d, testsupport::random_word(rng, raw.generators)))) == base);
      }
      const std::size_t p = rng() % raw.points.size();
      CHECK(tau(extract_model(reverse_point(raw, p))) == base);
    }
  }

  TEST_CASE("reorienting a surface negates trees with an odd count of its label") {
    Rng rng(78);
    for (int k = 0; k < 200; ++k) {
      const RawTower raw = testsupport::random_raw_tower(rng);
      const int label = 1 + static_cast<int>(rng() % raw.m);
      const TreeSum base = tau(extract_model(raw));
      TreeSum expected(base.context());
      for (const auto& [tree, c] : base.terms()) {
        const auto labels = tree.labels();
        const bool odd = std::count(labels.begin(), labels.end(), label) % 2 == 1;
        expected.add(tree, odd ? -c : c);
      }
      CHECK(tau(extract_model(flip_surface_orientation(raw, label))) == expected);
    }
  }
}

TEST_SUITE("tower model") {
  TEST_CASE("tau and hat_tau") {
    CHECK(tau(model_of({"+inner((1,2),3,)", "-inner((1,2),3,)"}, 1)).empty());
    CHECK(tau(model_of({"+inner((1,2),3,)"}, 1)) == sum_of({"+inner((1,2),3,)"}));
    CHECK(tau(model_of({"+inner((1,2),3,)", "+inner(((1,2),3),4,)"}, 1)) == sum_of({"+inner((1,2),3,)"}));

    const IhxTriple t{R("1"), R("2"), R("3"), R("4")};
    const TowerModel ihx = ihx_insert(TowerModel(kCtx, 2), t, 1);
    CHECK_FALSE(hat_tau(ihx).empty());
    CHECK(is_zero(tau(ihx), 2, 4));
    CHECK_FALSE(hat_tau(model_of({"+inner((1,2),3,)"}, 1)).empty());
  }

  TEST_CASE("points respect the declared order and context") {
    TowerModel model(kCtx, 2);
    CHECK_THROWS_AS(model.add_point(S("inner(1,2,)")), std::invalid_argument);
    CHECK_THROWS_AS(model.add_point(S("inner((1,2),(3,5),)")), ContextMismatch);
    CHECK(error_kind([&] { model.add_point(S("inner((1,2),(3,4),)"), 9); }) == MoveError::Kind::UnknownEdge);
    CHECK(error_kind([&] { model.point(3); }) == MoveError::Kind::UnknownPoint);
  }

  TEST_CASE("puncture moves") {
    const TowerModel model = model_of({"+inner((1,2),3,)"}, 1);
    const TowerPoint& p = model.points()[0];
    CHECK(move_puncture(model, p.id, p.puncture) == model);
    const DecoratedTree tree = p.tree.tree();
    EdgeId leaf3 = -1;
    for (EdgeId e = 0; e < tree.edge_count(); ++e) {
      for (VertexId v : {tree.edge(e).tail, tree.edge(e).head}) {
        if (tree.vertex(v).label == 3) leaf3 = e;
      }
    }
    const TowerModel moved = move_puncture(model, p.id, leaf3);
    CHECK(moved.points()[0].puncture == leaf3);
    CHECK(moved.points()[0].tree == p.tree);
    CHECK(moved.points()[0].sign == p.sign);
    CHECK(tau(moved) == tau(model));
    CHECK(error_kind([&] { move_puncture(model, p.id, 7); }) == MoveError::Kind::UnknownEdge);
    CHECK(error_kind([&] { move_puncture(model, 5, 0); }) == MoveError::Kind::UnknownPoint);

    Rng rng(4);
    for (int k = 0; k < 50; ++k) {
      const DecoratedTree t = testsupport::random_tree(rng, 1 + k % 4, 4);
      const EdgeId a = rng() % t.edge_count(), b = rng() % t.edge_count();
      const auto path = puncture_path(t, a, b);
      CHECK(path.front() == a);
      CHECK(path.back() == b);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const auto& e = t.edge(path[i]);
        const auto& f = t.edge(path[i + 1]);
        const bool share = e.tail == f.tail || e.tail == f.head || e.head == f.tail || e.head == f.head;
        CHECK(share);
      }
    }
  }

  TEST_CASE("IHX insertion") {
    TowerModel model = model_of({"+inner((1,2),(3,4),)"}, 2);
    const IhxTriple t{R("1"), R("3"), R("2"), R("4")};
    const TowerModel once = ihx_insert(model, t, -1);
    CHECK(once.points().size() == model.points().size() + 3);
    CHECK(is_zero(tau(once), 2, 4) == is_zero(tau(model), 2, 4));
    CHECK(hat_tau(once) == hat_tau(model) - ihx_relator(t, kCtx));
    CHECK(hat_tau(ihx_insert(once, t, 1)) == hat_tau(model));
    CHECK(error_kind([&] { ihx_insert(model, IhxTriple{R("1"), R("2"), R("3"), R("(1,4)")}, 1); }) ==
          MoveError::Kind::OrderMismatch);
  }

  TEST_CASE("IHX split") {
    const TowerModel model = model_of({"+inner((1,2),((3,4),1),)"}, 3);
    const TowerPoint& p = model.points()[0];
    const DecoratedTree tree = p.tree.tree();
    const EdgeId e = tree.interior_edges().at(0);
    const TowerModel split = ihx_split(model, p.id, e);
    CHECK(split.points().size() == 2);
    CHECK(is_zero(tau(split) - tau(model), 3, 4));
    EdgeId leaf = 0;
    while (tree.is_interior(leaf)) ++leaf;
    CHECK(error_kind([&] { ihx_split(model, p.id, leaf); }) == MoveError::Kind::NotInterior);
    CHECK(error_kind([&] { ihx_split(model, p.id, e, true); }) == MoveError::Kind::FlipNotAllowed);

    const TowerModel torsion = model_of({"+inner((1,1),(2,2),)"}, 2);
    const TowerPoint& q = torsion.points()[0];
    REQUIRE(q.tree.two_torsion());
    const EdgeId qe = q.tree.tree().interior_edges().at(0);
    CHECK(is_zero(tau(ihx_split(torsion, q.id, qe, true)) - tau(torsion), 2, 4));
  }

  TEST_CASE("cancelling simple pairs") {
    const TowerModel pair = model_of({"+inner((1,2),3,)", "-inner((1,2),3,)"}, 1);
    CHECK(cancel_simple_pair(pair, 0, 1).points().empty());
    const TowerModel three = model_of({"+inner((1,2),3,)", "+inner((2,1),3,)", "+inner((1,2),4,)"}, 1);
    const TowerModel left = cancel_simple_pair(three, 0, 1);
    REQUIRE(left.points().size() == 1);
    CHECK(left.points()[0].id == 2);
    CHECK(tau(left) == sum_of({"+inner((1,2),4,)"}));

    const TowerModel same = model_of({"+inner((1,2),3,)", "-inner((2,1),3,)"}, 1);
    CHECK(error_kind([&] { cancel_simple_pair(three, 0, 0); }) == MoveError::Kind::SamePoint);
    CHECK(error_kind([&] { cancel_simple_pair(same, 0, 1); }) == MoveError::Kind::SignMismatch);
    CHECK(error_kind([&] { cancel_simple_pair(pair, 0, 5); }) == MoveError::Kind::UnknownPoint);
    CHECK(error_kind([&] { cancel_simple_pair(model_of({"+inner((1,2),3,)", "-inner((1,2),4,)"}, 1), 0, 1); }) ==
          MoveError::Kind::TreeMismatch);
    const TowerModel claw =
        model_of({"+inner(((1,2),(3,4)),(1,2),)", "-inner(((1,2),(3,4)),(1,2),)"}, 4);
    CHECK(error_kind([&] { cancel_simple_pair(claw, 0, 1); }) == MoveError::Kind::NotSimple);
    const TowerModel mixed = model_of({"+inner((1,2),3,)", "-inner(((1,2),3),4,)"}, 1);
    CHECK(error_kind([&] { cancel_simple_pair(mixed, 0, 1); }) == MoveError::Kind::OrderMismatch);
    const TowerModel torsion = model_of({"+inner(1,(1,1),)", "+inner(1,(1,1),)"}, 1, 1);
    CHECK(cancel_simple_pair(torsion, 0, 1).points().empty());
  }

  TEST_CASE("glue and bch") {
    Rng rng(6);
    for (int k = 0; k < 50; ++k) {
      const TowerModel a = testsupport::random_model(rng, 2, 4, 1 + k % 4);
      const TowerModel b = testsupport::random_model(rng, 2, 4, k % 3);
      CHECK(tau(glue(a, b)) == tau(a) - tau(b));
      CHECK(tau(glue(a, a)).empty());
      CHECK(tau(glue(a, TowerModel(kCtx, 2))) == tau(a));
      CHECK(tau(glue(glue(a, b), glue(TowerModel(kCtx, 2), b))) == tau(a));
    }
    CHECK_THROWS_AS(glue(TowerModel(kCtx, 2), TowerModel(kCtx, 1)), ContextMismatch);
    CHECK_THROWS_AS(glue(TowerModel(kCtx, 2), TowerModel(Context{3, 0}, 2)), ContextMismatch);

    CHECK(bch_tower({}, 2, 4).points().empty());
    CHECK(tau(bch_tower({}, 2, 4)).empty());
    const TowerModel pm = bch_tower({S("+inner((1,2),(3,4),)"), S("-inner((1,2),(3,4),)")}, 2, 4);
    CHECK(pm.points().size() == 2);
    CHECK(tau(pm).empty());
    CHECK_THROWS_AS(bch_tower({S("+inner((1,2),3,)")}, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(bch_tower({S("+inner((1,2),(3,5),)")}, 2, 4), ContextMismatch);
  }
}

TEST_SUITE("certificates") {
  TEST_CASE("a simple pair needs one cancel") {
    TowerModel model(kCtx, 2);
    const CanonicalTree t = canonicalize(S("inner((1,2),(3,4),)").tree).tree;
    model.add_point(1, t, 0);
    model.add_point(-1, t, 0);
    const MoveCertificate cert = certify_raise_order(model);
    REQUIRE(cert.moves.size() == 1);
    CHECK(std::holds_alternative<CancelPairMove>(cert.moves[0]));
    const Verification v = verify_certificate(model, cert);
    CHECK(v.ok);
    REQUIRE(v.final_model.has_value());
    CHECK(v.final_model->declared_order() == 3);
    CHECK(v.final_model->points().empty());
  }

  TEST_CASE("an IHX triple certifies and replays to nothing") {
    const TowerModel model = ihx_insert(TowerModel(kCtx, 2), IhxTriple{R("1"), R("2"), R("3"), R("4")}, 1);
    const MoveCertificate cert = certify_raise_order(model);
    const Verification v = verify_certificate(model, cert);
    CHECK(v.ok);
    CHECK(v.final_model->points().empty());
  }

  TEST_CASE("a lone nonrepeating simple tree is an obstruction") {
    const TowerModel model = model_of({"+inner((1,2),(3,4),)"}, 2);
    try {
      certify_raise_order(model);
      FAIL("expected an obstruction");
    } catch (const ObstructionNonzero& e) {
      CHECK(e.normal_form().size() == 1);
      CHECK(std::string(e.what()).find("nonzero") != std::string::npos);
    }
  }

  TEST_CASE("higher-order points survive the raise") {
    const TowerModel model = model_of({"+inner((1,2),3,)", "-inner((1,2),3,)", "+inner(((1,2),3),4,)"}, 1);
    const Verification v = verify_certificate(model, certify_raise_order(model));
    CHECK(v.ok);
    CHECK(v.final_model->declared_order() == 2);
    CHECK(v.final_model->points().size() == 1);
  }

  TEST_CASE("bad certificates are rejected") {
    CHECK(verify_certificate(TowerModel(kCtx, 2), {}).ok);
    const TowerModel unequal = model_of({"+inner((1,2),(3,4),)", "-inner((1,3),(2,4),)"}, 2);
    const Verification v = verify_certificate(unequal, {{CancelPairMove{0, 1}}});
    CHECK_FALSE(v.ok);
    CHECK(v.reason.find("TreeMismatch") != std::string::npos);

    const TowerModel pair = model_of({"+inner((1,2),(3,4),)", "-inner((1,2),(3,4),)"}, 2);
    CHECK_FALSE(verify_certificate(pair, {}).ok);
    CHECK_FALSE(verify_certificate(pair, {{PunctureMove{0, 17}}}).ok);

    const TowerModel triple = ihx_insert(TowerModel(kCtx, 2), IhxTriple{R("1"), R("2"), R("3"), R("4")}, 1);
    MoveCertificate cert = certify_raise_order(triple);
    MoveCertificate truncated = cert;
    truncated.moves.pop_back();
    CHECK_FALSE(verify_certificate(triple, truncated).ok);
    cert.moves.insert(cert.moves.begin(), IhxSplitMove{0, 0, false});
    CHECK_FALSE(verify_certificate(triple, cert).ok);

    // Starting from a nonzero tau no certificate is accepted.
    const TowerModel lone = model_of({"+inner((1,2),(3,4),)"}, 2);
    CHECK_FALSE(verify_certificate(lone, {{IhxInsertMove{IhxTriple{R("1"), R("2"), R("3"), R("4")}, 1}}}).ok);
  }

  TEST_CASE("random zero models certify") {
    Rng rng(123);
    for (int n = 1; n <= 3; ++n) {
      const RelatorLattice lattice(n, 3, {}, true);
      PlannerOptions opts;
      opts.lattice = &lattice;
      for (int k = 0; k < 20; ++k) {
        const TowerModel model = testsupport::random_zero_model(rng, lattice);
        const MoveCertificate cert = certify_raise_order(model, opts);
        const Verification v = verify_certificate(model, cert, opts);
        CHECK_MESSAGE(v.ok, v.reason);
      }
    }
  }
}
