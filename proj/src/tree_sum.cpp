#include "wtree/tree_sum.hpp"

#include "wtree/linalg.hpp"

namespace wtree {

std::int64_t TreeSum::coefficient(const CanonicalTree& tree) const {
  auto it = terms_.find(tree);
  return it == terms_.end() ? 0 : it->second;
}

void TreeSum::add(const CanonicalTree& tree, std::int64_t coefficient) {
  if (ctx_.labels > 0 && !tree.labels().empty() && tree.labels().back() > ctx_.labels) {
    throw ContextMismatch("tree label exceeds context label count");
  }
  if (tree.max_generator() > ctx_.generators) {
    throw ContextMismatch("tree decoration uses a letter outside the context alphabet");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(tree, 0);
  std::int64_t value = linalg::add(it->second, coefficient);
  if (tree.two_torsion()) value = ((value % 2) + 2) % 2;
  if (value == 0) {
    terms_.erase(it);
  } else {
    it->second = value;
  }
}

void TreeSum::add(const SignedTree& tree) {
  const Canonicalized c = canonicalize(tree);
  add(c.tree, c.sign);
}

void TreeSum::check(const TreeSum& other) const {
  if (!(ctx_ == other.ctx_)) throw ContextMismatch("tree sums over different contexts");
}

TreeSum& TreeSum::operator+=(const TreeSum& other) {
  check(other);
  for (const auto& [tree, c] : other.terms_) add(tree, c);
  return *this;
}

TreeSum& TreeSum::operator-=(const TreeSum& other) {
  check(other);
  for (const auto& [tree, c] : other.terms_) add(tree, linalg::mul(-1, c));
  return *this;
}

TreeSum TreeSum::scaled(std::int64_t k) const {
  TreeSum out(ctx_);
  for (const auto& [tree, c] : terms_) out.add(tree, linalg::mul(k, c));
  return out;
}

std::string TreeSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [tree, c] : terms_) {
    if (!out.empty()) out += " ";
    out += c < 0 ? "-" : "+";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + " ";
    out += tree.code();
  }
  return out;
}

}  // namespace wtree
