#pragma once

// Smith normal form of sparse integer matrices: rank and invariant factors.
//
// Unit pivots are eliminated on the sparse representation first (boundary and
// relation matrices are dominated by +-1 entries); whatever is left is
// finished densely with arbitrary-precision integers. The sparse phase runs on
// checked 64-bit arithmetic and restarts on BigInt if an entry overflows.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "psc/errors.hpp"
#include "psc/perm_group.hpp"

namespace psc {

struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> entries;  // per row, sorted by column, nonzero

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r) {}

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : entries) n += r.size();
    return n;
  }

  /// Adds v to entry (r, c); rows must be sorted afterwards via normalize().
  void add(std::size_t r, std::uint32_t c, std::int64_t v) { entries[r].emplace_back(c, v); }

  /// Sorts each row, merges duplicate columns and drops zeros.
  void normalize() {
    for (auto& row : entries) {
      std::sort(row.begin(), row.end());
      std::vector<std::pair<std::uint32_t, std::int64_t>> out;
      for (auto& [c, v] : row) {
        if (!out.empty() && out.back().first == c)
          out.back().second += v;
        else
          out.emplace_back(c, v);
      }
      std::erase_if(out, [](const auto& e) { return e.second == 0; });
      row = std::move(out);
    }
  }
};

struct SmithResult {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next
};

namespace detail {

struct Overflow {};

inline std::int64_t checked_sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t prod, out;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
inline BigInt checked_sub_mul(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

/// Invariant factors from a diagonal: repeatedly replace (a, b) by
/// (gcd, lcm) so that each divides the next.
inline std::vector<BigInt> invariant_factors(std::vector<BigInt> d) {
  for (auto& x : d) x = abs(x);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      if (g == d[i]) continue;
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  std::sort(d.begin(), d.end());
  return d;
}

/// Dense Smith diagonal with the pivot of least absolute value at each step.
inline std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // least nonzero |entry| in the trailing block
      std::size_t pi = m, pj = n;
      BigInt best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < best)) {
            best = abs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (pi == m) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(a[t][t]);
  }
  return diag;
}

template <class Int>
SmithResult smith_impl(const SparseIntMatrix& input, const Limits& limits) {
  using Entry = std::pair<std::uint32_t, Int>;
  std::vector<std::vector<Entry>> rows(input.rows);
  for (std::size_t r = 0; r < input.rows; ++r)
    for (auto [c, v] : input.entries[r]) rows[r].emplace_back(c, Int(v));
  std::vector<std::vector<std::uint32_t>> col_rows(input.cols);
  std::vector<std::size_t> col_count(input.cols, 0);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (auto& e : rows[r]) {
      col_rows[e.first].push_back(r);
      ++col_count[e.first];
    }
  std::vector<char> alive(rows.size(), 1);
  using Key = std::pair<std::size_t, std::uint32_t>;  // (nnz, row)
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) heap.emplace(rows[r].size(), r);

  SmithResult result;
  std::vector<Entry> merged;
  while (!heap.empty()) {
    auto [nnz, r] = heap.top();
    heap.pop();
    if (!alive[r] || rows[r].size() != nnz || nnz == 0) continue;
    // unit entry with the sparsest column
    std::size_t best = rows[r].size();
    for (std::size_t t = 0; t < rows[r].size(); ++t)
      if (is_unit(rows[r][t].second) && (best == rows[r].size() || col_count[rows[r][t].first] <
                                                                        col_count[rows[r][best].first]))
        best = t;
    if (best == rows[r].size()) continue;  // revisited if another pivot changes it
    const std::uint32_t c = rows[r][best].first;
    const Int a = rows[r][best].second;
    std::vector<std::uint32_t> targets = col_rows[c];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::uint32_t k : targets) {
      if (k == r || !alive[k]) continue;
      auto& rk = rows[k];
      auto it = std::lower_bound(rk.begin(), rk.end(), c, [](const Entry& e, std::uint32_t col) { return e.first < col; });
      if (it == rk.end() || it->first != c) continue;
      const Int f = it->second * a;  // a is a unit, so a^-1 == a
      merged.clear();
      std::size_t i = 0, j = 0;
      const auto& rr = rows[r];
      while (i < rk.size() || j < rr.size()) {
        if (j == rr.size() || (i < rk.size() && rk[i].first < rr[j].first)) {
          merged.push_back(std::move(rk[i++]));
        } else if (i == rk.size() || rr[j].first < rk[i].first) {
          Int v = checked_sub_mul(Int(0), f, rr[j].second);
          merged.emplace_back(rr[j].first, std::move(v));
          col_rows[rr[j].first].push_back(k);
          ++col_count[rr[j].first];
          ++j;
        } else {
          Int v = checked_sub_mul(rk[i].second, f, rr[j].second);
          if (v != 0)
            merged.emplace_back(rk[i].first, std::move(v));
          else
            --col_count[rk[i].first];
          ++i;
          ++j;
        }
      }
      rk.swap(merged);
      if (!rk.empty()) heap.emplace(rk.size(), k);
    }
    for (auto& e : rows[r]) --col_count[e.first];
    alive[r] = 0;
    rows[r].clear();
    col_rows[c].clear();
    ++result.rank;
  }

  // dense remainder
  std::vector<std::uint32_t> live_rows;
  std::vector<std::int64_t> col_map(input.cols, -1);
  std::size_t live_cols = 0;
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    if (!alive[r] || rows[r].empty()) continue;
    live_rows.push_back(r);
    for (auto& e : rows[r])
      if (col_map[e.first] < 0) col_map[e.first] = static_cast<std::int64_t>(live_cols++);
  }
  if (live_rows.empty()) return result;
  if (static_cast<std::uint64_t>(live_rows.size()) * live_cols > limits.dense_matrix)
    throw CapExceeded("topology", "dense matrix", "--cap-dense", limits.dense_matrix);
  std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols, 0));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (auto& e : rows[live_rows[i]]) dense[i][static_cast<std::size_t>(col_map[e.first])] = BigInt(e.second);
  auto diag = dense_smith_diagonal(std::move(dense));
  result.rank += diag.size();
  for (auto& d : invariant_factors(std::move(diag)))
    if (d > 1) result.torsion.push_back(d);
  return result;
}

}  // namespace detail

inline SmithResult smith_normal_form(const SparseIntMatrix& m, const Limits& limits = {}) {
  if (m.nonzeros() > limits.matrix_entries)
    throw CapExceeded("topology", "matrix entries", "--cap-matrix", limits.matrix_entries);
  try {
    return detail::smith_impl<std::int64_t>(m, limits);
  } catch (const detail::Overflow&) {
    return detail::smith_impl<BigInt>(m, limits);
  }
}

}  // namespace psc
