#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wtree/canonical.hpp"
#include "wtree/lie.hpp"
#include "wtree/tower.hpp"
#include "wtree/tower_json.hpp"
#include "wtree/tree_group.hpp"
#include "wtree/tree_io.hpp"

namespace py = pybind11;
using namespace wtree;

namespace {

using Terms = std::vector<std::pair<std::int64_t, std::string>>;

Terms terms_of(const TreeSum& sum) {
  Terms out;
  for (const auto& [tree, c] : sum.terms()) out.emplace_back(c, tree.code());
  return out;
}

struct CanonicalForm {
  int sign = 1;
  std::string code;
  bool two_torsion = false;
  int order = 0;
};

CanonicalForm canonical_form(const std::string& text, int generators) {
  const ParsedTree parsed = parse_tree(text, {0, generators});
  if (parsed.is_rooted()) {
    const CanonicalRooted c = canonicalize_rooted(parsed.rooted(), parsed.sign);
    return {c.sign, c.code, c.two_torsion, parsed.rooted().order()};
  }
  const Canonicalized c = canonicalize(SignedTree{parsed.sign, parsed.unrooted()});
  return {c.sign, c.tree.code(), c.tree.two_torsion(), c.tree.order()};
}

GroupOptions group_options(bool nonrepeating) {
  GroupOptions opts;
  opts.nonrepeating = nonrepeating;
  return opts;
}

TowerModel model_of(const std::string& text) { return tower_from_json(Json::parse(text)); }

}  // namespace

PYBIND11_MODULE(wtree, m) {
  m.doc() = "Decorated trees, their groups and split Whitney tower models";

  static py::exception<ObstructionNonzero> obstruction(m, "ObstructionNonzero", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContextMismatch>(m, "ContextMismatch", PyExc_ValueError);
  py::register_exception<JsonFormatError>(m, "JsonFormatError", PyExc_ValueError);
  py::register_exception<MoveError>(m, "MoveError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ObstructionNonzero& e) {
      obstruction(e.normal_form().to_string().c_str());
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<CanonicalForm>(m, "CanonicalForm")
      .def_readonly("sign", &CanonicalForm::sign)
      .def_readonly("code", &CanonicalForm::code)
      .def_readonly("two_torsion", &CanonicalForm::two_torsion)
      .def_readonly("order", &CanonicalForm::order)
      .def("__str__", [](const CanonicalForm& c) { return (c.sign < 0 ? "-" : "+") + c.code; })
      .def("__repr__", [](const CanonicalForm& c) {
        return "CanonicalForm(sign=" + std::to_string(c.sign) + ", code='" + c.code + "')";
      });

  py::class_<AbelianGroupStructure>(m, "GroupStructure")
      .def_readonly("free_rank", &AbelianGroupStructure::free_rank)
      .def_readonly("torsion", &AbelianGroupStructure::torsion)
      .def("__str__", &AbelianGroupStructure::to_string)
      .def("__repr__", [](const AbelianGroupStructure& g) { return "GroupStructure('" + g.to_string() + "')"; })
      .def("__eq__", [](const AbelianGroupStructure& a, const AbelianGroupStructure& b) { return a == b; });

  m.def("canonicalize", &canonical_form, py::arg("tree"), py::arg("generators") = 26,
        "Canonical form of a signed rooted or unrooted tree");
  m.def(
      "group_structure",
      [](int order, int labels, bool nonrepeating) { return group_structure(order, labels, group_options(nonrepeating)); },
      py::arg("order"), py::arg("labels"), py::arg("nonrepeating") = false);
  m.def(
      "rational_rank_bound",
      [](int order, int labels, bool nonrepeating) { return lie::rational_rank_bound(order, labels, {}, nonrepeating); },
      py::arg("order"), py::arg("labels"), py::arg("nonrepeating") = false);
  m.def(
      "reduce_to_simple",
      [](const std::string& text, int labels) {
        const Context ctx{labels, 0};
        const Canonicalized c = canonicalize(parse_signed(text, ctx));
        return terms_of(reduce_to_simple(c.tree, ctx).scaled(c.sign));
      },
      py::arg("tree"), py::arg("labels"), "Simple trees summing to the given tree modulo IHX, as (coefficient, code)");
  m.def(
      "is_zero",
      [](const std::vector<std::string>& trees, int order, int labels) {
        const Context ctx{labels, 0};
        TreeSum sum(ctx);
        for (const auto& t : trees) sum.add(parse_signed(t, ctx));
        return is_zero(sum, order, labels);
      },
      py::arg("trees"), py::arg("order"), py::arg("labels"), "Whether the signed trees sum to zero in T_order(labels)");

  m.def(
      "tau", [](const std::string& model) { return terms_of(tau(model_of(model))); }, py::arg("model_json"),
      "Order-n intersection invariant of a model or raw tower, as (coefficient, code)");
  m.def(
      "certify",
      [](const std::string& model) {
        const TowerModel t = model_of(model);
        return certificate_to_json(t, certify_raise_order(t)).dump();
      },
      py::arg("model_json"), "Move certificate as JSON; raises ObstructionNonzero when tau is nonzero");
  m.def(
      "verify",
      [](const std::string& model, const std::string& cert) {
        const TowerModel t = model_of(model);
        const Verification v = verify_certificate(t, certificate_from_json(t, Json::parse(cert)));
        return py::make_tuple(v.ok, v.reason);
      },
      py::arg("model_json"), py::arg("certificate_json"));
  m.def(
      "glue", [](const std::string& a, const std::string& b) { return model_to_json(glue(model_of(a), model_of(b))).dump(); },
      py::arg("a_json"), py::arg("b_json"));
  m.def(
      "bch",
      [](const std::vector<std::string>& trees, int order, int labels, int generators) {
        const Context ctx{labels, generators};
        std::vector<SignedTree> sigma;
        for (const auto& t : trees) sigma.push_back(parse_signed(t, ctx));
        return model_to_json(bch_tower(sigma, order, labels)).dump();
      },
      py::arg("trees"), py::arg("order"), py::arg("labels"), py::arg("generators") = 0);
}
