#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "wtree/tree.hpp"

namespace wtree {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Result of parsing the ASCII tree grammar
///
///   signed   := ["+" | "-"] (unrooted | rooted)
///   unrooted := "inner(" rooted "," rooted "," word ")"
///   rooted   := label [":" word] | "(" rooted "," rooted ")" [":" word]
///   label    := decimal
///   word     := { a-z | A-Z }        (uppercase = inverse)
///
/// Whitespace is ignored. A word after a bracket decorates the edge above that
/// bracket; the printer only emits one when it is nontrivial.
struct ParsedTree {
  int sign = 1;
  std::variant<RootedTree, DecoratedTree> tree;

  bool is_rooted() const { return std::holds_alternative<RootedTree>(tree); }
  const RootedTree& rooted() const { return std::get<RootedTree>(tree); }
  const DecoratedTree& unrooted() const { return std::get<DecoratedTree>(tree); }
};

/// `ctx.labels == 0` disables the label range check.
ParsedTree parse_tree(std::string_view text, const Context& ctx);
RootedTree parse_rooted(std::string_view text, const Context& ctx);
DecoratedTree parse_unrooted(std::string_view text, const Context& ctx);
SignedTree parse_signed(std::string_view text, const Context& ctx);
GroupWord parse_word(std::string_view text, const Context& ctx);

std::string to_string(const RootedTree& tree);
/// Printed as the inner product split at edge 0.
std::string to_string(const DecoratedTree& tree);
std::string to_string(const SignedTree& tree);

/// Edge address relative to the printed form: "" is edge 0, otherwise "a" or
/// "b" (side of edge 0) followed by one or more of "l"/"r" descending into the
/// bracket; the address names the edge above the reached subtree.
std::string edge_path(const DecoratedTree& tree, EdgeId e);
/// Throws std::invalid_argument on malformed or dangling paths.
EdgeId edge_from_path(const DecoratedTree& tree, std::string_view path);

}  // namespace wtree
