#pragma once

// Order complexes of finite posets and their skeleta.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <vector>

#include "psc/errors.hpp"
#include "psc/posets.hpp"

namespace psc {

using Vertex = std::uint32_t;

/// k-simplices stored flat, k+1 increasing vertex ids per simplex, the list
/// itself sorted lexicographically.
struct SimplexList {
  std::size_t dim = 0;
  std::vector<Vertex> flat;

  std::size_t width() const noexcept { return dim + 1; }
  std::size_t size() const noexcept { return flat.size() / width(); }
  std::span<const Vertex> operator[](std::size_t i) const noexcept {
    return std::span<const Vertex>(flat.data() + i * width(), width());
  }

  /// Position of a sorted simplex, or size() when absent.
  std::size_t find(std::span<const Vertex> s) const noexcept {
    std::size_t lo = 0, hi = size();
    const std::size_t w = width();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      const Vertex* r = flat.data() + mid * w;
      if (std::lexicographical_compare(r, r + w, s.begin(), s.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < size() && std::equal(s.begin(), s.end(), flat.data() + lo * w)) return lo;
    return size();
  }
};

namespace detail {

inline void sort_unique_rows(std::vector<Vertex>& flat, std::size_t w) {
  const std::size_t m = flat.size() / w;
  std::vector<std::uint32_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0u);
  const Vertex* d = flat.data();
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(d + std::size_t(a) * w, d + std::size_t(a) * w + w, d + std::size_t(b) * w,
                                        d + std::size_t(b) * w + w);
  });
  std::vector<Vertex> out;
  out.reserve(flat.size());
  for (std::size_t k = 0; k < m; ++k) {
    const Vertex* r = d + std::size_t(idx[k]) * w;
    if (k > 0 && std::equal(r, r + w, out.end() - static_cast<std::ptrdiff_t>(w))) continue;
    out.insert(out.end(), r, r + w);
  }
  flat = std::move(out);
}

}  // namespace detail

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// From arbitrary simplices: each is sorted, duplicates and simplices
  /// contained in others are dropped, and vertices that appear in no simplex
  /// become isolated 0-simplices.
  SimplicialComplex(std::size_t vertex_count, std::vector<std::vector<Vertex>> simplices)
      : vertex_count_(vertex_count) {
    for (auto& s : simplices) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (s.empty()) throw InvalidInput("complex", "empty simplex");
      if (s.back() >= vertex_count) throw InvalidInput("complex", "simplex vertex out of range");
    }
    std::sort(simplices.begin(), simplices.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    std::vector<std::vector<std::uint32_t>> containing(vertex_count);
    std::vector<std::vector<Vertex>> kept;
    for (auto& s : simplices) {
      bool contained = false;
      for (std::uint32_t f : containing[s.front()]) {
        if (std::includes(kept[f].begin(), kept[f].end(), s.begin(), s.end())) {
          contained = true;
          break;
        }
      }
      if (contained) continue;
      for (Vertex v : s) containing[v].push_back(static_cast<std::uint32_t>(kept.size()));
      kept.push_back(std::move(s));
    }
    for (Vertex v = 0; v < vertex_count; ++v)
      if (containing[v].empty()) kept.push_back({v});
    std::sort(kept.begin(), kept.end());
    facets_ = std::move(kept);
    finish();
  }

  /// Trusted constructor: `facets` are already sorted, pairwise incomparable
  /// and cover every vertex.
  static SimplicialComplex from_maximal(std::size_t vertex_count, std::vector<std::vector<Vertex>> facets) {
    SimplicialComplex K;
    K.vertex_count_ = vertex_count;
    std::sort(facets.begin(), facets.end());
    K.facets_ = std::move(facets);
    K.finish();
    return K;
  }

  SimplicialComplex(const SimplicialComplex& o) : vertex_count_(o.vertex_count_), facets_(o.facets_), dim_(o.dim_) {}
  SimplicialComplex(SimplicialComplex&& o) noexcept
      : vertex_count_(o.vertex_count_), facets_(std::move(o.facets_)), dim_(o.dim_) {}
  SimplicialComplex& operator=(const SimplicialComplex& o) {
    if (this != &o) {
      vertex_count_ = o.vertex_count_;
      facets_ = o.facets_;
      dim_ = o.dim_;
      std::lock_guard lock(cache_mutex_);
      cache_.clear();
    }
    return *this;
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<std::vector<Vertex>>& maximal_simplices() const noexcept { return facets_; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return dim_; }

  /// All k-simplices (k+1 vertices), sorted; cached per dimension.
  const SimplexList& skeleton(std::size_t k) const {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return *it->second;
    auto list = std::make_unique<SimplexList>();
    list->dim = k;
    const std::size_t w = k + 1;
    std::vector<std::size_t> pick(w);
    for (const auto& f : facets_) {
      if (f.size() < w) continue;
      // enumerate w-subsets of f in lexicographic order
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        for (std::size_t t = 0; t < w; ++t) list->flat.push_back(f[pick[t]]);
        std::size_t t = w;
        while (t > 0 && pick[t - 1] == f.size() - w + t - 1) --t;
        if (t == 0) break;
        ++pick[t - 1];
        for (std::size_t u = t; u < w; ++u) pick[u] = pick[u - 1] + 1;
      }
    }
    detail::sort_unique_rows(list->flat, w);
    return *cache_.emplace(k, std::move(list)).first->second;
  }

 private:
  void finish() {
    dim_ = -1;
    for (const auto& f : facets_) dim_ = std::max(dim_, static_cast<int>(f.size()) - 1);
  }

  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Vertex>> facets_;
  int dim_ = -1;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::size_t, std::unique_ptr<SimplexList>> cache_;
};

inline SimplexList skeleton(const SimplicialComplex& K, std::size_t k) { return K.skeleton(k); }

/// Covering relation of a poset: j covers i when i < j with nothing between.
inline std::vector<std::vector<std::uint32_t>> covers_below(const AbstractPoset& X) {
  auto up = X.up_sets();
  std::vector<std::vector<std::uint32_t>> below(X.size);
  std::vector<char> mark(X.size, 0);
  for (std::uint32_t i = 0; i < X.size; ++i) {
    for (auto k : up[i])
      for (auto j : up[k]) mark[j] = 1;
    for (auto j : up[i])
      if (!mark[j]) below[j].push_back(i);
    for (auto k : up[i])
      for (auto j : up[k]) mark[j] = 0;
  }
  return below;
}

/// K(X): maximal simplices are the maximal chains of X, found by descending
/// from each maximal element along the covering relation.
inline SimplicialComplex order_complex(const AbstractPoset& X, const Limits& limits = {}) {
  if (X.size == 0) throw InvalidInput("complex", "order complex of an empty poset");
  auto below = covers_below(X);
  std::vector<char> has_above(X.size, 0);
  for (auto [a, b] : X.relations) has_above[a] = 1;
  std::vector<std::vector<Vertex>> chains;
  std::vector<Vertex> path;
  // iterative DFS: stack of (vertex, next child index)
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex top = 0; top < X.size; ++top) {
    if (has_above[top]) continue;
    stack.assign(1, {top, 0});
    path.assign(1, top);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (below[v].empty()) {
        if (chains.size() >= limits.chains) throw CapExceeded("complex", "chains", "--cap-chains", limits.chains);
        std::vector<Vertex> c = path;
        std::sort(c.begin(), c.end());
        chains.push_back(std::move(c));
        stack.pop_back();
        path.pop_back();
        continue;
      }
      if (next == below[v].size()) {
        stack.pop_back();
        path.pop_back();
        continue;
      }
      Vertex child = below[v][next++];
      stack.emplace_back(child, 0);
      path.push_back(child);
    }
  }
  return SimplicialComplex::from_maximal(X.size, std::move(chains));
}

inline SimplicialComplex order_complex(const SubgroupPoset& X, const Limits& limits = {}) {
  return order_complex(X.abstract(), limits);
}

/// Alternating sum of simplex counts.
inline std::int64_t euler_characteristic(const SimplicialComplex& K) {
  std::int64_t chi = 0;
  for (int k = 0; k <= K.dimension(); ++k) {
    auto n = static_cast<std::int64_t>(K.skeleton(static_cast<std::size_t>(k)).size());
    chi += (k % 2 == 0) ? n : -n;
  }
  return chi;
}

}  // namespace psc
