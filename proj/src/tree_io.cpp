#include "wtree/tree_io.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace wtree {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Context& ctx) : text_(text), ctx_(ctx) {}

  ParsedTree parse_signed_tree() {
    ParsedTree out{1, RootedTree::leaf(1)};
    skip_space();
    if (peek() == '+' || peek() == '-') {
      out.sign = take() == '-' ? -1 : 1;
    }
    skip_space();
    if (text_.substr(pos_).starts_with("inner")) {
      pos_ += 5;
      expect('(');
      RootedTree a = parse_rooted_tree();
      expect(',');
      RootedTree b = parse_rooted_tree();
      expect(',');
      GroupWord g = parse_word_here();
      expect(')');
      out.tree = inner_product(a, b, g);
    } else {
      out.tree = parse_rooted_tree();
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

  GroupWord parse_whole_word() {
    GroupWord w = parse_word_here();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character in group word");
    return w;
  }

 private:
  RootedTree parse_rooted_tree() {
    skip_space();
    if (peek() == '(') {
      take();
      RootedTree left = parse_rooted_tree();
      expect(',');
      RootedTree right = parse_rooted_tree();
      expect(')');
      RootedTree node = RootedTree::product(left, right);
      return maybe_word(node);
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(at_end() ? "unexpected end of input" : "expected label or '('");
    }
    const std::size_t start = pos_;
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (take() - '0');
      if (value > 1'000'000) fail("label too large", start);
    }
    if (value < 1 || (ctx_.labels > 0 && value > ctx_.labels)) {
      fail("label " + std::to_string(value) + " out of range", start);
    }
    return maybe_word(RootedTree::leaf(static_cast<int>(value)));
  }

  RootedTree maybe_word(const RootedTree& t) {
    skip_space();
    if (peek() != ':') return t;
    take();
    return t.with_word(parse_word_here());
  }

  GroupWord parse_word_here() {
    skip_space();
    const std::size_t start = pos_;
    std::vector<int> letters;
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      const std::size_t at = pos_;
      const char c = take();
      const int index = std::islower(static_cast<unsigned char>(c)) ? c - 'a' + 1 : -(c - 'A' + 1);
      if (std::abs(index) > ctx_.generators) {
        fail(std::string("unknown group letter '") + c + "'", at);
      }
      letters.push_back(index);
      skip_space();
    }
    if (!GroupWord::is_reduced(letters)) fail("group word is not freely reduced", start);
    return GroupWord::from_letters(letters);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  void expect(char c) {
    skip_space();
    if (peek() != c) {
      fail(at_end() ? std::string("unexpected end of input, expected '") + c + "'"
                    : std::string("expected '") + c + "'");
    }
    take();
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) const { throw ParseError(message, at); }

  std::string_view text_;
  Context ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedTree parse_tree(std::string_view text, const Context& ctx) { return Parser(text, ctx).parse_signed_tree(); }

RootedTree parse_rooted(std::string_view text, const Context& ctx) {
  ParsedTree p = parse_tree(text, ctx);
  if (!p.is_rooted()) throw ParseError("expected a rooted tree", 0);
  if (p.sign != 1) throw ParseError("rooted tree carries a sign", 0);
  return p.rooted();
}

DecoratedTree parse_unrooted(std::string_view text, const Context& ctx) {
  ParsedTree p = parse_tree(text, ctx);
  if (p.is_rooted()) throw ParseError("expected an unrooted tree", 0);
  if (p.sign != 1) throw ParseError("unrooted tree carries a sign", 0);
  return p.unrooted();
}

SignedTree parse_signed(std::string_view text, const Context& ctx) {
  ParsedTree p = parse_tree(text, ctx);
  if (p.is_rooted()) throw ParseError("expected an unrooted tree", 0);
  return {p.sign, p.unrooted()};
}

GroupWord parse_word(std::string_view text, const Context& ctx) { return Parser(text, ctx).parse_whole_word(); }

std::string to_string(const RootedTree& tree) {
  std::string out;
  if (tree.is_leaf()) {
    out = std::to_string(tree.label());
  } else {
    out = "(" + to_string(tree.left()) + "," + to_string(tree.right()) + ")";
  }
  if (!tree.word().empty()) out += ":" + tree.word().to_string();
  return out;
}

std::string to_string(const DecoratedTree& tree) {
  const EdgeSplit split = split_at_edge(tree, 0);
  return "inner(" + to_string(split.tail_side) + "," + to_string(split.head_side) + "," +
         split.word.to_string() + ")";
}

std::string to_string(const SignedTree& tree) { return (tree.sign < 0 ? "-" : "+") + to_string(tree.tree); }

namespace {

// Children of `v` in cyclic order after `parent_edge`.
std::pair<EdgeId, EdgeId> children_after(const DecoratedTree& tree, VertexId v, EdgeId parent_edge) {
  const auto& vx = tree.vertex(v);
  int slot = 0;
  while (vx.edges[slot] != parent_edge) ++slot;
  return {vx.edges[(slot + 1) % 3], vx.edges[(slot + 2) % 3]};
}

bool find_path(const DecoratedTree& tree, VertexId v, EdgeId parent_edge, EdgeId target, std::string& path) {
  if (tree.vertex(v).is_leaf()) return false;
  const auto [first, second] = children_after(tree, v, parent_edge);
  const EdgeId kids[2] = {first, second};
  for (int k = 0; k < 2; ++k) {
    path.push_back(k == 0 ? 'l' : 'r');
    if (kids[k] == target) return true;
    if (find_path(tree, tree.other_end(kids[k], v), kids[k], target, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::string edge_path(const DecoratedTree& tree, EdgeId e) {
  if (e == 0) return "";
  const auto& root_edge = tree.edge(0);
  std::string path = "a";
  if (find_path(tree, root_edge.tail, 0, e, path)) return path;
  path = "b";
  if (find_path(tree, root_edge.head, 0, e, path)) return path;
  throw std::invalid_argument("edge not in tree");
}

EdgeId edge_from_path(const DecoratedTree& tree, std::string_view path) {
  if (path.empty()) return 0;
  if (path.size() < 2 || (path[0] != 'a' && path[0] != 'b')) {
    throw std::invalid_argument("edge path must be empty or start with 'a'/'b' followed by l/r steps");
  }
  EdgeId edge = 0;
  VertexId v = path[0] == 'a' ? tree.edge(0).tail : tree.edge(0).head;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i] != 'l' && path[i] != 'r') throw std::invalid_argument("edge path steps are 'l' or 'r'");
    if (tree.vertex(v).is_leaf()) throw std::invalid_argument("edge path descends past a leaf");
    const auto [first, second] = children_after(tree, v, edge);
    edge = path[i] == 'l' ? first : second;
    v = tree.other_end(edge, v);
  }
  return edge;
}

}  // namespace wtree
