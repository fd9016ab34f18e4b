#include "wtree/lie.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <sstream>

#include "wtree/linalg.hpp"

namespace wtree::lie {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using linalg::Int;

}  // namespace

LieElement LieElement::generator(int i) {
  LieElement out;
  out.terms_[{i}] = 1;
  return out;
}

std::int64_t LieElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void LieElement::add_term(const Word& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = linalg::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, linalg::mul(c, -1));
  return *this;
}

LieElement LieElement::scaled(std::int64_t k) const {
  LieElement out;
  if (k == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, linalg::mul(c, k));
  return out;
}

LieElement operator*(const LieElement& a, const LieElement& b) {
  LieElement out;
  for (const auto& [u, x] : a.terms_) {
    for (const auto& [v, y] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, linalg::mul(x, y));
    }
  }
  return out;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1) out << a;
    for (int g : w) out << "X" << g;
  }
  return out.str();
}

LieElement lie_bracket(const LieElement& a, const LieElement& b) { return a * b - b * a; }

LieElement rooted_tree_to_lie(const RootedTree& tree) {
  if (!tree.word().empty()) throw DecoratedInput();
  if (tree.is_leaf()) return LieElement::generator(tree.label());
  return lie_bracket(rooted_tree_to_lie(tree.left()), rooted_tree_to_lie(tree.right()));
}

EtaValue eta(const DecoratedTree& tree) {
  if (tree.has_decorations()) throw DecoratedInput();
  EtaValue out;
  for (VertexId v = 0; v < static_cast<VertexId>(tree.vertices().size()); ++v) {
    const DecoratedTree::Vertex& vertex = tree.vertex(v);
    if (!vertex.is_leaf()) continue;
    const EdgeId e = vertex.edges[0];
    const EdgeSplit split = split_at_edge(tree, e);
    const RootedTree& rest = tree.edge(e).tail == v ? split.head_side : split.tail_side;
    out[vertex.label] += rooted_tree_to_lie(rest);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

EtaValue eta(const TreeSum& sum) {
  EtaValue out;
  for (const auto& [tree, c] : sum.terms()) {
    for (auto& [label, x] : eta(tree.tree())) out[label] += x.scaled(c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool is_zero(const EtaValue& value) {
  for (const auto& [label, x] : value) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int m, int length) {
  std::vector<Word> out;
  if (m < 1 || length < 1) return out;
  // Duval's generation of Lyndon words of length <= n in lexicographic order.
  Word w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == length) out.push_back(w);
    const std::size_t k = w.size();
    while (static_cast<int>(w.size()) < length) w.push_back(w[w.size() - k]);
    while (!w.empty() && w.back() == m) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

namespace {

bool is_lyndon(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  }
  return !w.empty();
}

// Standard factorization w = uv with v the longest proper Lyndon suffix.
std::size_t standard_split(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (is_lyndon(Word(w.begin() + i, w.end()))) return i;
  }
  throw std::invalid_argument("not a Lyndon word of length >= 2");
}

}  // namespace

std::string standard_bracketing(const Word& w) {
  if (!is_lyndon(w)) throw std::invalid_argument("not a Lyndon word");
  if (w.size() == 1) return "X" + std::to_string(w[0]);
  const std::size_t i = standard_split(w);
  return "[" + standard_bracketing(Word(w.begin(), w.begin() + i)) + "," +
         standard_bracketing(Word(w.begin() + i, w.end())) + "]";
}

LieElement standard_bracket(const Word& w) {
  if (!is_lyndon(w)) throw std::invalid_argument("not a Lyndon word");
  if (w.size() == 1) return LieElement::generator(w[0]);
  const std::size_t i = standard_split(w);
  return lie_bracket(standard_bracket(Word(w.begin(), w.begin() + i)), standard_bracket(Word(w.begin() + i, w.end())));
}

std::vector<LieElement> hall_basis(int m, int length, const LieBounds& bounds) {
  if (length > bounds.max_length) {
    throw BoundsExceeded("length " + std::to_string(length) + " exceeds bound " + std::to_string(bounds.max_length));
  }
  std::vector<LieElement> out;
  for (const Word& w : lyndon_words(m, length)) out.push_back(standard_bracket(w));
  return out;
}

namespace {

template <class T>
using Row = std::vector<std::pair<int, T>>;

Int mul_checked(Int a, Int b) { return linalg::mul(a, b); }
Int sub_checked(Int a, Int b) { return linalg::sub(a, b); }
Int gcd_of(Int a, Int b) { return std::gcd(a, b); }
BigInt mul_checked(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub_checked(const BigInt& a, const BigInt& b) { return a - b; }
BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <class T>
void divide_content(Row<T>& row) {
  T g = 0;
  for (const auto& [i, x] : row) g = gcd_of(g, x);
  if (g > 1) {
    for (auto& [i, x] : row) x /= g;
  }
}

// Fraction-free sparse elimination; rows are kept primitive.
template <class T>
int rank_of(const std::vector<Row<T>>& input) {
  std::map<int, Row<T>> pivots;
  for (Row<T> row : input) {
    while (!row.empty()) {
      const int lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        divide_content(row);
        pivots.emplace(lead, std::move(row));
        break;
      }
      const Row<T>& p = it->second;
      const T g = gcd_of(row.front().second, p.front().second);
      const T a = p.front().second / g;
      const T b = row.front().second / g;
      // row := a*row - b*p, which clears the leading entry.
      Row<T> next;
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < p.size()) {
        T x = 0;
        int col;
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          col = row[i].first;
          x = mul_checked(a, row[i++].second);
        } else if (i == row.size() || p[j].first < row[i].first) {
          col = p[j].first;
          x = sub_checked(T(0), mul_checked(b, p[j++].second));
        } else {
          col = row[i].first;
          x = sub_checked(mul_checked(a, row[i++].second), mul_checked(b, p[j++].second));
        }
        if (x != 0) next.emplace_back(col, x);
      }
      row = std::move(next);
      divide_content(row);
    }
  }
  return static_cast<int>(pivots.size());
}

int rank_rows(const std::vector<Row<Int>>& rows) {
  try {
    return rank_of(rows);
  } catch (const linalg::Overflow&) {
    std::vector<Row<BigInt>> big;
    big.reserve(rows.size());
    for (const Row<Int>& r : rows) {
      Row<BigInt> b;
      for (const auto& [i, x] : r) b.emplace_back(i, BigInt(x));
      big.push_back(std::move(b));
    }
    return rank_of(big);
  }
}

class Indexer {
 public:
  int operator()(int label, const Word& w) {
    auto [it, inserted] = index_.try_emplace({label, w}, static_cast<int>(index_.size()));
    return it->second;
  }

 private:
  std::map<std::pair<int, Word>, int> index_;
};

Row<Int> to_row(const EtaValue& value, Indexer& indexer) {
  std::vector<std::pair<int, Int>> entries;
  for (const auto& [label, x] : value) {
    for (const auto& [w, c] : x.terms()) entries.emplace_back(indexer(label, w), c);
  }
  std::sort(entries.begin(), entries.end());
  return entries;
}

}  // namespace

int rank(const std::vector<LieElement>& elements) {
  std::vector<EtaValue> values;
  values.reserve(elements.size());
  for (const LieElement& x : elements) values.push_back({{0, x}});
  return rank(values);
}

int rank(const std::vector<EtaValue>& values) {
  Indexer indexer;
  std::vector<Row<Int>> rows;
  rows.reserve(values.size());
  for (const EtaValue& v : values) rows.push_back(to_row(v, indexer));
  return rank_rows(rows);
}

int rational_rank_bound(int order, int labels, const EnumerationBounds& bounds, bool nonrepeating) {
  std::vector<EtaValue> values;
  for (const CanonicalTree& t : all_trees(order, labels, bounds)) {
    if (nonrepeating && !t.nonrepeating()) continue;
    values.push_back(eta(t.tree()));
  }
  return rank(values);
}

}  // namespace wtree::lie
