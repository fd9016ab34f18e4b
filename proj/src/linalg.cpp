#include "wtree/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace wtree::linalg {

Int floor_div(Int a, Int b) {
  if (b == 0) throw std::domain_error("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = sub(old_r, mul(q, r));
    old_r = r;
    r = tmp;
    tmp = sub(old_s, mul(q, s));
    old_s = s;
    s = tmp;
    tmp = sub(old_t, mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

SparseVector::SparseVector(std::vector<std::pair<int, Int>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [index, value] : entries) {
    if (!entries_.empty() && entries_.back().first == index) {
      entries_.back().second = add(entries_.back().second, value);
    } else {
      entries_.emplace_back(index, value);
    }
  }
  std::erase_if(entries_, [](const auto& e) { return e.second == 0; });
}

Int SparseVector::at(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  return (it != entries_.end() && it->first == index) ? it->second : 0;
}

SparseVector SparseVector::combine(Int a, const SparseVector& x, Int b, const SparseVector& y) {
  SparseVector out;
  out.entries_.reserve(x.size() + y.size());
  auto i = x.entries_.begin();
  auto j = y.entries_.begin();
  while (i != x.entries_.end() || j != y.entries_.end()) {
    int index;
    Int value;
    if (j == y.entries_.end() || (i != x.entries_.end() && i->first < j->first)) {
      index = i->first;
      value = mul(a, i->second);
      ++i;
    } else if (i == x.entries_.end() || j->first < i->first) {
      index = j->first;
      value = mul(b, j->second);
      ++j;
    } else {
      index = i->first;
      value = add(mul(a, i->second), mul(b, j->second));
      ++i;
      ++j;
    }
    if (value != 0) out.entries_.emplace_back(index, value);
  }
  return out;
}

SparseVector SparseVector::scaled(Int k) const { return combine(k, *this, 0, SparseVector{}); }

IntegerLattice::IntegerLattice(int dimension, bool track_provenance)
    : dimension_(dimension), track_(track_provenance) {}

std::size_t IntegerLattice::add_generator(const SparseVector& v) {
  const std::size_t index = generators_++;
  if (!v.empty() && (v.leading() < 0 || v.entries().back().first >= dimension_)) {
    throw std::out_of_range("lattice generator index out of range");
  }
  Row cur{v, track_ ? SparseVector({{static_cast<int>(index), 1}}) : SparseVector{}};
  while (!cur.values.empty()) {
    const int c = cur.values.leading();
    const Int a = cur.values.leading_value();
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      if (a < 0) {
        cur.values = cur.values.scaled(-1);
        cur.provenance = cur.provenance.scaled(-1);
      }
      rows_.emplace(c, std::move(cur));
      break;
    }
    Row& pivot = it->second;
    const Int d = pivot.values.leading_value();
    if (a % d == 0) {
      const Int q = a / d;
      cur.values = SparseVector::combine(1, cur.values, -q, pivot.values);
      if (track_) cur.provenance = SparseVector::combine(1, cur.provenance, -q, pivot.provenance);
      continue;
    }
    const ExtendedGcd eg = extended_gcd(d, a);
    const Int a_g = a / eg.g;
    const Int d_g = d / eg.g;
    Row next_pivot{SparseVector::combine(eg.x, pivot.values, eg.y, cur.values),
                   track_ ? SparseVector::combine(eg.x, pivot.provenance, eg.y, cur.provenance) : SparseVector{}};
    Row next_cur{SparseVector::combine(a_g, pivot.values, -d_g, cur.values),
                 track_ ? SparseVector::combine(a_g, pivot.provenance, -d_g, cur.provenance) : SparseVector{}};
    pivot = std::move(next_pivot);
    cur = std::move(next_cur);
  }
  return index;
}

SparseVector IntegerLattice::normal_form(const SparseVector& v) const {
  SparseVector r = v;
  int from = -1;
  while (true) {
    int column = -1;
    for (const auto& [index, value] : r.entries()) {
      if (index > from && rows_.count(index)) {
        column = index;
        break;
      }
    }
    if (column < 0) break;
    const Row& row = rows_.at(column);
    const Int q = floor_div(r.at(column), row.values.leading_value());
    if (q != 0) r = SparseVector::combine(1, r, -q, row.values);
    from = column;
  }
  return r;
}

std::optional<SparseVector> IntegerLattice::express(const SparseVector& v) const {
  if (!track_) throw std::logic_error("lattice was built without provenance");
  SparseVector r = v;
  SparseVector coefficients;
  int from = -1;
  while (true) {
    int column = -1;
    for (const auto& [index, value] : r.entries()) {
      if (index > from && rows_.count(index)) {
        column = index;
        break;
      }
    }
    if (column < 0) break;
    const Row& row = rows_.at(column);
    const Int q = floor_div(r.at(column), row.values.leading_value());
    if (q != 0) {
      r = SparseVector::combine(1, r, -q, row.values);
      coefficients = SparseVector::combine(1, coefficients, q, row.provenance);
    }
    from = column;
  }
  if (!r.empty()) return std::nullopt;
  return coefficients;
}

std::vector<Int> IntegerLattice::invariant_factors() const {
  std::map<int, SparseVector> rows;
  for (const auto& [c, row] : rows_) rows.emplace(c, row.values);
  // Reduce entries above each pivot into [0, pivot).
  for (auto it = rows.begin(); it != rows.end(); ++it) {
    const int c = it->first;
    const Int d = it->second.leading_value();
    for (auto above = rows.begin(); above != it; ++above) {
      const Int q = floor_div(above->second.at(c), d);
      if (q != 0) above->second = SparseVector::combine(1, above->second, -q, it->second);
    }
  }
  std::vector<Int> factors;
  std::set<int> unit_columns;
  std::vector<const SparseVector*> rest;
  for (const auto& [c, row] : rows) {
    if (row.leading_value() == 1) {
      unit_columns.insert(c);
      factors.push_back(1);
    } else {
      rest.push_back(&row);
    }
  }
  // A unit pivot column is zero outside its row, so column operations clear
  // that row without touching the others.
  std::map<int, int> column_index;
  for (const SparseVector* row : rest) {
    for (const auto& [c, value] : row->entries()) {
      if (!unit_columns.count(c)) column_index.emplace(c, 0);
    }
  }
  int next = 0;
  for (auto& [c, idx] : column_index) idx = next++;
  DenseMatrix dense(rest.size(), std::vector<Int>(column_index.size(), 0));
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (const auto& [c, value] : rest[i]->entries()) {
      if (!unit_columns.count(c)) dense[i][column_index.at(c)] = value;
    }
  }
  const SmithResult snf = smith_normal_form(std::move(dense));
  factors.insert(factors.end(), snf.factors.begin(), snf.factors.end());
  std::sort(factors.begin(), factors.end());
  return factors;
}

SmithResult smith_normal_form(DenseMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  // Moves the smallest nonzero |entry| of row t / column t (or the whole
  // trailing block if `block`) to position (t, t). Returns false if none.
  auto bring_min = [&](std::size_t t, bool block) {
    std::size_t bi = rows, bj = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (!block && i != t && j != t) continue;
        const Int v = a[i][j];
        if (v == 0) continue;
        const Int mag = v < 0 ? -v : v;
        if (best == 0 || mag < best) {
          best = mag;
          bi = i;
          bj = j;
        }
      }
    }
    if (best == 0) return false;
    std::swap(a[t], a[bi]);
    swap_cols(t, bj);
    return true;
  };

  SmithResult out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (!bring_min(t, true)) break;
    while (true) {
      bool clean = true;
      const Int p = a[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Int q = a[i][t] / p;
        for (std::size_t j = t; j < cols; ++j) a[i][j] = sub(a[i][j], mul(q, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Int q = a[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) a[i][j] = sub(a[i][j], mul(q, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        bring_min(t, false);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % p != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] = add(a[t][k], a[i][k]);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.factors.push_back(a[t][t] < 0 ? -a[t][t] : a[t][t]);
    ++out.rank;
  }
  return out;
}

}  // namespace wtree::linalg
