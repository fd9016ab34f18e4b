#include "cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "wtree/canonical.hpp"
#include "wtree/lie.hpp"
#include "wtree/tower.hpp"
#include "wtree/tower_json.hpp"
#include "wtree/tree_group.hpp"
#include "wtree/tree_io.hpp"

namespace wtree::cli {
namespace {

struct Options {
  int order = 0;
  int labels = 0;
  int generators = 26;
  int max_order = EnumerationBounds{}.max_order;
  int max_labels = EnumerationBounds{}.max_labels;
  bool json = false;
  bool nonrepeating = false;
  std::string out_file;
  std::string tree;
  std::vector<std::string> files;
  std::vector<std::string> trees;

  EnumerationBounds bounds() const { return {max_order, max_labels}; }
  GroupOptions group_options() const { return {bounds(), nonrepeating}; }
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

std::string tree_text(const Options& o, std::istream& in) {
  if (!o.tree.empty()) return o.tree;
  std::string text = trim(std::string(std::istreambuf_iterator<char>(in), {}));
  if (text.empty()) throw InputError("no tree given on the command line or stdin");
  return text;
}

Json read_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  try {
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

int max_label(const ParsedTree& parsed) {
  std::vector<int> labels =
      parsed.is_rooted() ? parsed.rooted().labels() : parsed.unrooted().leaf_labels();
  int best = 1;
  for (int l : labels) best = std::max(best, l);
  return best;
}

Json sum_to_json(const TreeSum& sum) {
  Json terms = Json::array();
  for (const auto& [tree, c] : sum.terms()) {
    terms.push_back({{"coefficient", c}, {"tree", tree.code()}, {"two_torsion", tree.two_torsion()}});
  }
  return terms;
}

void canon(const Options& o, std::istream& in, std::ostream& out) {
  const std::string text = tree_text(o, in);
  const ParsedTree parsed = parse_tree(text, {o.labels, o.generators});
  std::string code;
  int sign = 1;
  bool torsion = false;
  int order = 0;
  if (parsed.is_rooted()) {
    const CanonicalRooted c = canonicalize_rooted(parsed.rooted(), parsed.sign);
    code = c.code;
    sign = c.sign;
    torsion = c.two_torsion;
    order = parsed.rooted().order();
  } else {
    const Canonicalized c = canonicalize(SignedTree{parsed.sign, parsed.unrooted()});
    code = c.tree.code();
    sign = c.sign;
    torsion = c.tree.two_torsion();
    order = c.tree.order();
  }
  if (o.json) {
    out << Json{{"code", code}, {"sign", sign}, {"two_torsion", torsion}, {"order", order}}.dump(2) << '\n';
  } else {
    out << (sign < 0 ? "-" : "+") << code << (torsion ? "  (two-torsion)" : "") << '\n';
  }
}

void reduce(const Options& o, std::istream& in, std::ostream& out) {
  const std::string text = tree_text(o, in);
  const ParsedTree parsed = parse_tree(text, {o.labels, o.generators});
  if (parsed.is_rooted()) throw InputError("reduce needs an unrooted tree inner(a,b,w)");
  const Context ctx{o.labels > 0 ? o.labels : max_label(parsed), o.generators};
  const Canonicalized c = canonicalize(SignedTree{parsed.sign, parsed.unrooted()});
  const TreeSum sum = reduce_to_simple(c.tree, ctx).scaled(c.sign);
  if (o.json) {
    out << Json{{"terms", sum_to_json(sum)}}.dump(2) << '\n';
  } else {
    out << sum.to_string() << '\n';
  }
}

void groups(const Options& o, std::ostream& out) {
  const GroupTable t = group_table(o.order, o.labels, o.group_options());
  if (o.json) {
    Json torsion = Json::array();
    for (linalg::Int d : t.structure.torsion) torsion.push_back(d);
    out << Json{{"order", t.order},
                {"labels", t.labels},
                {"nonrepeating", o.nonrepeating},
                {"structure", t.structure.to_string()},
                {"free_rank", t.structure.free_rank},
                {"torsion", torsion},
                {"generator_count", t.generator_count},
                {"relator_count", t.relator_count}}
               .dump(2)
        << '\n';
  } else {
    out << t.structure.to_string() << '\n';
  }
}

void rank(const Options& o, std::ostream& out) {
  const int r = lie::rational_rank_bound(o.order, o.labels, o.bounds(), o.nonrepeating);
  if (o.json) {
    out << Json{{"order", o.order}, {"labels", o.labels}, {"nonrepeating", o.nonrepeating}, {"rank", r}}.dump(2)
        << '\n';
  } else {
    out << r << '\n';
  }
}

void tau_verb(const Options& o, std::ostream& out) {
  const TowerModel model = tower_from_json(read_json(o.files.at(0)));
  const TreeSum t = tau(model);
  if (o.json) {
    out << Json{{"order", model.declared_order()}, {"m", model.m()}, {"terms", sum_to_json(t)}}.dump(2) << '\n';
  } else {
    out << t.to_string() << '\n';
  }
}

int certify(const Options& o, std::ostream& out) {
  const TowerModel model = tower_from_json(read_json(o.files.at(0)));
  try {
    const MoveCertificate cert = certify_raise_order(model, {o.bounds(), nullptr});
    out << certificate_to_json(model, cert).dump(2) << '\n';
    return 0;
  } catch (const ObstructionNonzero& e) {
    if (o.json) {
      out << Json{{"obstruction", "nonzero"}, {"normal_form", sum_to_json(e.normal_form())}}.dump(2) << '\n';
    } else {
      out << "obstruction nonzero: " << e.normal_form().to_string() << '\n';
    }
    return 2;
  }
}

int verify(const Options& o, std::ostream& out) {
  const TowerModel model = tower_from_json(read_json(o.files.at(0)));
  const MoveCertificate cert = certificate_from_json(model, read_json(o.files.at(1)));
  const Verification v = verify_certificate(model, cert, {o.bounds(), nullptr});
  if (o.json) {
    Json j{{"valid", v.ok}};
    if (!v.ok) j["reason"] = v.reason;
    if (v.final_model) j["final"] = model_to_json(*v.final_model);
    out << j.dump(2) << '\n';
  } else {
    out << (v.ok ? "valid" : "invalid: " + v.reason) << '\n';
  }
  return v.ok ? 0 : 1;
}

void glue_verb(const Options& o, std::ostream& out) {
  const TowerModel a = tower_from_json(read_json(o.files.at(0)));
  const TowerModel b = tower_from_json(read_json(o.files.at(1)));
  out << model_to_json(glue(a, b)).dump(2) << '\n';
}

void bch(const Options& o, std::istream& in, std::ostream& out) {
  std::vector<std::string> texts = o.trees;
  if (texts.empty()) {
    std::string line;
    while (std::getline(in, line)) {
      if (!trim(line).empty()) texts.push_back(trim(line));
    }
  }
  const Context ctx{o.labels, o.generators};
  std::vector<SignedTree> sigma;
  for (const std::string& t : texts) sigma.push_back(parse_signed(t, ctx));
  out << model_to_json(bch_tower(sigma, o.order, o.labels)).dump(2) << '\n';
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "Print JSON instead of text");
  cmd->add_option("--out", o.out_file, "Write output to FILE");
  cmd->add_option("--max-order", o.max_order, "Largest order to enumerate")->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-labels", o.max_labels, "Largest label count to enumerate")->check(CLI::PositiveNumber);
}

void add_cell(CLI::App* cmd, Options& o) {
  cmd->add_option("--order", o.order, "Tree order n")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--labels", o.labels, "Number of labels m")->required()->check(CLI::PositiveNumber);
  cmd->add_flag("--nonrepeating", o.nonrepeating, "Only trees with pairwise distinct labels");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tree groups and split Whitney tower models", "wtree"};
  app.require_subcommand(1, 1);

  CLI::App* canon_cmd = app.add_subcommand("canon", "Canonical form of a tree");
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Rewrite a tree as a sum of simple trees");
  for (CLI::App* cmd : {canon_cmd, reduce_cmd}) {
    add_common(cmd, o);
    cmd->add_option("tree", o.tree, "Tree in the ASCII grammar (default: stdin)");
    cmd->add_option("--labels", o.labels, "Label range (default: unchecked)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--generators", o.generators, "Free group rank")->check(CLI::Range(0, 26));
  }

  CLI::App* groups_cmd = app.add_subcommand("groups", "Structure of T_n(m)");
  CLI::App* rank_cmd = app.add_subcommand("rank", "Rank of the Lie image of all trees");
  for (CLI::App* cmd : {groups_cmd, rank_cmd}) {
    add_common(cmd, o);
    add_cell(cmd, o);
  }

  CLI::App* tau_cmd = app.add_subcommand("tau", "Intersection tree sum of a tower");
  CLI::App* certify_cmd = app.add_subcommand("certify", "Plan moves raising the order of a tower");
  for (CLI::App* cmd : {tau_cmd, certify_cmd}) {
    add_common(cmd, o);
    cmd->add_option("tower", o.files, "Tower JSON file")->required()->expected(1);
  }

  CLI::App* verify_cmd = app.add_subcommand("verify", "Replay a certificate");
  add_common(verify_cmd, o);
  verify_cmd->add_option("files", o.files, "Tower JSON and certificate JSON")->required()->expected(2);

  CLI::App* glue_cmd = app.add_subcommand("glue", "Glue two towers, reversing the second");
  add_common(glue_cmd, o);
  glue_cmd->add_option("towers", o.files, "Two tower JSON files")->required()->expected(2);

  CLI::App* bch_cmd = app.add_subcommand("bch", "Split tower realizing a list of trees");
  add_common(bch_cmd, o);
  bch_cmd->add_option("--order", o.order, "Tree order n")->required()->check(CLI::NonNegativeNumber);
  bch_cmd->add_option("--labels", o.labels, "Number of labels m")->required()->check(CLI::PositiveNumber);
  bch_cmd->add_option("--generators", o.generators, "Free group rank")->check(CLI::Range(0, 26));
  bch_cmd->add_option("trees", o.trees, "Signed trees (default: one per stdin line)");

  // A negative tree such as "-(2,1)" would read as an option; the grammar
  // skips whitespace, so a leading space keeps it positional.
  std::vector<std::string> words;
  for (const std::string& a : args) {
    const bool negative_tree = a.size() > 1 && a[0] == '-' &&
                               (a[1] == '(' || std::isdigit(static_cast<unsigned char>(a[1])) || a.rfind("-inner", 0) == 0);
    words.push_back(negative_tree ? " " + a : a);
  }
  std::vector<const char*> argv{"wtree"};
  for (const std::string& a : words) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (*canon_cmd) canon(o, in, buffer);
    if (*reduce_cmd) reduce(o, in, buffer);
    if (*groups_cmd) groups(o, buffer);
    if (*rank_cmd) rank(o, buffer);
    if (*tau_cmd) tau_verb(o, buffer);
    if (*certify_cmd) status = certify(o, buffer);
    if (*verify_cmd) status = verify(o, buffer);
    if (*glue_cmd) glue_verb(o, buffer);
    if (*bch_cmd) bch(o, in, buffer);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  // --out receives results; an obstruction report is not a certificate.
  if (o.out_file.empty() || status != 0) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_file);
    if (!file) {
      err << "error: cannot write " << o.out_file << '\n';
      return 1;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace wtree::cli
