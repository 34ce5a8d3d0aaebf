#pragma once

// Components, edge-path fundamental groups and integer homology of
// simplicial complexes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "psc/complex.hpp"
#include "psc/errors.hpp"
#include "psc/parallel.hpp"
#include "psc/presentation.hpp"
#include "psc/smith.hpp"

namespace psc {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

struct ComponentMap {
  std::size_t count = 0;
  std::vector<std::uint32_t> of;  // vertex -> component, numbered by smallest vertex
};

inline ComponentMap components(const SimplicialComplex& K) {
  UnionFind uf(K.vertex_count());
  if (K.dimension() >= 1) {
    const SimplexList& e = K.skeleton(1);
    for (std::size_t i = 0; i < e.size(); ++i) uf.unite(e[i][0], e[i][1]);
  }
  ComponentMap m;
  m.of.assign(K.vertex_count(), 0);
  std::vector<std::int64_t> label(K.vertex_count(), -1);
  for (std::uint32_t v = 0; v < K.vertex_count(); ++v) {
    auto r = uf.find(v);
    if (label[r] < 0) label[r] = static_cast<std::int64_t>(m.count++);
    m.of[v] = static_cast<std::uint32_t>(label[r]);
  }
  return m;
}

/// Edge-path presentations of every component. The spanning forest is grown
/// by BFS from the smallest vertex of each component, neighbours visited in
/// increasing order; non-tree edges become generators in lexicographic order
/// within their component, and each triangle a<b<c contributes
/// w(ab) w(bc) w(ac)^-1.
inline std::vector<GroupPresentation> pi1_presentations(const SimplicialComplex& K) {
  const ComponentMap comp = components(K);
  std::vector<GroupPresentation> out(comp.count);
  if (K.dimension() < 1) return out;
  const SimplexList& edges = K.skeleton(1);
  const std::size_t n = K.vertex_count();

  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> adj(n);  // (neighbour, edge index)
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    adj[edges[i][0]].emplace_back(edges[i][1], i);
    adj[edges[i][1]].emplace_back(edges[i][0], i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<char> tree(edges.size(), 0), seen(n, 0);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (auto [w, e] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        tree[e] = 1;
        q.push(w);
      }
    }
  }

  std::vector<std::int32_t> gen(edges.size(), 0);
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    if (tree[i]) continue;
    auto& P = out[comp.of[edges[i][0]]];
    gen[i] = static_cast<std::int32_t>(++P.generator_count);
  }
  if (K.dimension() < 2) return out;
  const SimplexList& tri = K.skeleton(2);
  for (std::size_t t = 0; t < tri.size(); ++t) {
    auto s = tri[t];
    const Vertex ab[2] = {s[0], s[1]}, bc[2] = {s[1], s[2]}, ac[2] = {s[0], s[2]};
    Word w;
    if (auto g = gen[edges.find(ab)]) w.push_back(g);
    if (auto g = gen[edges.find(bc)]) w.push_back(g);
    if (auto g = gen[edges.find(ac)]) w.push_back(-g);
    out[comp.of[s[0]]].relators.push_back(std::move(w));
  }
  return out;
}

inline GroupPresentation pi1_presentation(const SimplicialComplex& K, std::size_t component) {
  auto all = pi1_presentations(K);
  if (component >= all.size()) throw InvalidInput("topology", "no component " + std::to_string(component));
  return std::move(all[component]);
}

struct ComponentPi1 {
  std::size_t raw_generators = 0;
  std::size_t raw_relators = 0;
  GroupPresentation simplified;
  Certificate certificate;
  std::size_t free_factor_rank = 0;  // generators of the simplified presentation in no relator
  GroupPresentation residual;
  Abelianization abelianization;
};

struct Pi1Report {
  std::vector<ComponentPi1> components;
  bool abelianizations_agree = true;

  std::size_t component_count() const noexcept { return components.size(); }
};

inline ComponentPi1 analyze_presentation(const GroupPresentation& raw, const Limits& limits = {}) {
  ComponentPi1 c;
  c.raw_generators = raw.generator_count;
  c.raw_relators = raw.relators.size();
  c.simplified = tietze_simplify(raw, limits.relator_length);
  c.certificate = certify(c.simplified);
  auto [free_rank, residual] = split_free_factor(c.simplified);
  c.free_factor_rank = free_rank;
  c.residual = std::move(residual);
  Abelianization res = abelianization(c.residual, limits);
  c.abelianization = {res.rank + free_rank, std::move(res.torsion)};
  return c;
}

/// pi_1 of every component; components are independent and run concurrently.
inline Pi1Report fundamental_groups(const SimplicialComplex& K, const Limits& limits = {}) {
  auto raw = pi1_presentations(K);
  Pi1Report report;
  report.components.resize(raw.size());
  parallel_for(raw.size(), limits.threads,
               [&](std::size_t i) { report.components[i] = analyze_presentation(raw[i], limits); });
  for (const auto& c : report.components)
    if (!(c.abelianization == report.components.front().abelianization)) report.abelianizations_agree = false;
  return report;
}

struct HomologyReport {
  std::vector<std::size_t> betti;           // by dimension
  std::vector<std::vector<BigInt>> torsion;  // invariant factors by dimension
  bool reduced = false;
};

/// Boundary map from k-simplices to (k-1)-simplices, one row per k-simplex;
/// the face omitting position i carries sign (-1)^i.
inline SparseIntMatrix boundary_matrix(const SimplicialComplex& K, std::size_t k) {
  const SimplexList& hi = K.skeleton(k);
  const SimplexList& lo = K.skeleton(k - 1);
  SparseIntMatrix m(hi.size(), lo.size());
  std::vector<Vertex> face(k);
  for (std::size_t r = 0; r < hi.size(); ++r) {
    auto s = hi[r];
    for (std::size_t i = 0; i <= k; ++i) {
      std::size_t t = 0;
      for (std::size_t j = 0; j <= k; ++j)
        if (j != i) face[t++] = s[j];
      m.add(r, static_cast<std::uint32_t>(lo.find(face)), i % 2 == 0 ? 1 : -1);
    }
  }
  m.normalize();
  return m;
}

/// Unreduced integer homology in degrees 0..max_dim.
inline HomologyReport homology(const SimplicialComplex& K, std::size_t max_dim, const Limits& limits = {}) {
  if (K.dimension() < 0) throw InvalidInput("topology", "homology of the empty complex");
  if (max_dim > static_cast<std::size_t>(K.dimension()))
    throw InvalidInput("topology", "homology degree " + std::to_string(max_dim) + " exceeds dimension " +
                                       std::to_string(K.dimension()));
  const std::size_t top = std::min<std::size_t>(max_dim + 1, static_cast<std::size_t>(K.dimension()));
  // snf[k] for the boundary out of degree k, k = 1..top
  std::vector<SmithResult> snf(top + 1);
  for (std::size_t k = 0; k <= top; ++k) K.skeleton(k);
  parallel_for(top, limits.threads,
               [&](std::size_t i) { snf[i + 1] = smith_normal_form(boundary_matrix(K, i + 1), limits); });
  HomologyReport h;
  for (std::size_t k = 0; k <= max_dim; ++k) {
    const std::size_t n = K.skeleton(k).size();
    const std::size_t in = k + 1 <= top ? snf[k + 1].rank : 0;
    const std::size_t out = k >= 1 ? snf[k].rank : 0;
    h.betti.push_back(n - in - out);
    h.torsion.push_back(k + 1 <= top ? snf[k + 1].torsion : std::vector<BigInt>{});
  }
  return h;
}

}  // namespace psc
