#pragma once

// The p-subgroup posets A_p(G) (quillen), S_p(G) (sp) and B_p(G) (bouc),
// plus truncation and join.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "psc/errors.hpp"
#include "psc/parallel.hpp"
#include "psc/perm_group.hpp"
#include "psc/subgroups.hpp"

namespace psc {

enum class PosetKind { quillen, sp, bouc };

inline std::string to_string(PosetKind k) {
  switch (k) {
    case PosetKind::quillen: return "quillen";
    case PosetKind::sp: return "sp";
    case PosetKind::bouc: return "bouc";
  }
  return "?";
}

inline PosetKind parse_poset_kind(const std::string& s) {
  if (s == "quillen") return PosetKind::quillen;
  if (s == "sp") return PosetKind::sp;
  if (s == "bouc") return PosetKind::bouc;
  throw InvalidInput("posets", "unknown poset kind '" + s + "' (expected quillen, sp or bouc)");
}

using Relation = std::pair<std::uint32_t, std::uint32_t>;  // first < second in the poset

/// A finite poset on {0..size-1}, given by its full list of comparable pairs.
struct AbstractPoset {
  std::size_t size = 0;
  std::vector<Relation> relations;  // sorted, transitively closed

  std::vector<std::vector<std::uint32_t>> up_sets() const {
    std::vector<std::vector<std::uint32_t>> up(size);
    for (auto [a, b] : relations) up[a].push_back(b);
    for (auto& u : up) std::sort(u.begin(), u.end());
    return up;
  }

  /// Throws unless `relations` is a transitively closed strict order.
  void validate() const {
    auto up = up_sets();
    for (auto [a, b] : relations) {
      if (a >= size || b >= size) throw InvalidInput("posets", "relation endpoint out of range");
      if (a == b) throw InvalidInput("posets", "relation is not irreflexive");
      if (std::binary_search(up[b].begin(), up[b].end(), a)) throw InvalidInput("posets", "relation is not antisymmetric");
      for (auto c : up[b])
        if (!std::binary_search(up[a].begin(), up[a].end(), c))
          throw InvalidInput("posets", "relation is not transitively closed");
    }
  }

  static AbstractPoset antichain(std::size_t n) { return {n, {}}; }

  static AbstractPoset chain(std::size_t n) {
    AbstractPoset p{n, {}};
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) p.relations.emplace_back(i, j);
    return p;
  }
};

/// X * Y: disjoint union (X first) with every x below every y.
inline AbstractPoset poset_join(const AbstractPoset& X, const AbstractPoset& Y) {
  AbstractPoset J{X.size + Y.size, X.relations};
  const auto off = static_cast<std::uint32_t>(X.size);
  for (std::uint32_t x = 0; x < X.size; ++x)
    for (std::uint32_t y = 0; y < Y.size; ++y) J.relations.emplace_back(x, off + y);
  for (auto [a, b] : Y.relations) J.relations.emplace_back(off + a, off + b);
  std::sort(J.relations.begin(), J.relations.end());
  return J;
}

struct SubgroupPoset {
  PosetKind kind = PosetKind::quillen;
  std::uint64_t prime = 2;
  PermGroup parent;
  std::vector<Subgroup> nodes;      // id = index; sorted by subgroup key
  std::vector<Relation> relations;  // (i, j) with node i a proper subgroup of node j
  std::optional<unsigned> truncation;

  AbstractPoset abstract() const { return {nodes.size(), relations}; }
};

/// All proper inclusions among `nodes`. Candidate supergroups of H are read
/// off an element -> nodes index using the generator of H with the shortest
/// posting list.
inline std::vector<Relation> inclusion_relations(const std::vector<Subgroup>& nodes, unsigned threads = 1) {
  std::unordered_map<Permutation, std::vector<std::uint32_t>, PermutationHash> posting;
  for (std::uint32_t id = 0; id < nodes.size(); ++id) {
    const ElementSet& e = nodes[id].elements();
    for (std::size_t r = 1; r < e.size(); ++r) posting[e.element(r)].push_back(id);
  }
  std::vector<std::vector<std::uint32_t>> above(nodes.size());
  parallel_for(nodes.size(), threads, [&](std::size_t i) {
    const Subgroup& H = nodes[i];
    const std::vector<std::uint32_t>* best = nullptr;
    for (const auto& g : H.generators()) {
      auto it = posting.find(g);
      if (it == posting.end()) return;
      if (!best || it->second.size() < best->size()) best = &it->second;
    }
    if (!best) return;
    const std::uint64_t h = H.order_u64();
    for (std::uint32_t j : *best) {
      if (j == i) continue;
      const std::uint64_t k = nodes[j].order_u64();
      if (k <= h || k % h != 0) continue;
      if (H.is_subgroup_of(nodes[j])) above[i].push_back(j);
    }
  });
  std::vector<Relation> rel;
  for (std::uint32_t i = 0; i < above.size(); ++i)
    for (std::uint32_t j : above[i]) rel.emplace_back(i, j);
  std::sort(rel.begin(), rel.end());
  return rel;
}

namespace detail {

inline void require_prime_divides(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("posets", std::to_string(p) + " is not prime");
  if (G.order() % p != 0)
    throw InvalidInput("posets", "p = " + std::to_string(p) + " does not divide |G| = " + G.order().str());
}

inline SubgroupPoset assemble(PosetKind kind, const PermGroup& G, std::uint64_t p, std::vector<Subgroup> nodes,
                              const Limits& limits) {
  sort_subgroups(nodes);
  SubgroupPoset X;
  X.kind = kind;
  X.prime = p;
  X.parent = G;
  X.relations = inclusion_relations(nodes, limits.threads);
  X.nodes = std::move(nodes);
  return X;
}

/// All G-conjugates of the given subgroups of a Sylow subgroup.
inline std::vector<Subgroup> conjugate_closure(const PermGroup& G, const std::vector<Subgroup>& reps,
                                               const Limits& limits) {
  std::vector<Subgroup> nodes;
  for (auto& c : conjugacy_classes(G, reps, limits)) {
    if (nodes.size() + c.members.size() > limits.subgroup_count)
      throw CapExceeded("posets", "subgroup count", "--cap-subgroups", limits.subgroup_count);
    for (auto& m : c.members) nodes.push_back(std::move(m));
  }
  return nodes;
}

}  // namespace detail

/// B_p(G): conjugates of the p-radical subgroups found inside one Sylow.
inline SubgroupPoset build_bouc(const PermGroup& G, std::uint64_t p, const Limits& limits = {}) {
  detail::require_prime_divides(G, p);
  Subgroup S = sylow(G, p, limits);
  std::vector<Subgroup> subs = all_subgroups_of_p_group(S, limits);
  std::vector<char> radical(subs.size(), 0);
  parallel_for(subs.size(), limits.threads, [&](std::size_t i) { radical[i] = is_p_radical(G, subs[i], p, limits); });
  std::vector<Subgroup> reps;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (radical[i]) reps.push_back(subs[i]);
  return detail::assemble(PosetKind::bouc, G, p, detail::conjugate_closure(G, reps, limits), limits);
}

/// S_p(G): conjugates of every non-trivial subgroup of one Sylow.
inline SubgroupPoset build_sp(const PermGroup& G, std::uint64_t p, const Limits& limits = {}) {
  detail::require_prime_divides(G, p);
  Subgroup S = sylow(G, p, limits);
  return detail::assemble(PosetKind::sp, G, p,
                          detail::conjugate_closure(G, all_subgroups_of_p_group(S, limits), limits), limits);
}

/// A_p(G): non-trivial elementary abelian p-subgroups.
inline SubgroupPoset build_quillen(const PermGroup& G, std::uint64_t p, const Limits& limits = {}) {
  detail::require_prime_divides(G, p);
  return detail::assemble(PosetKind::quillen, G, p, elementary_abelian_subgroups(G, p, limits), limits);
}

inline SubgroupPoset build_poset(PosetKind kind, const PermGroup& G, std::uint64_t p, const Limits& limits = {}) {
  switch (kind) {
    case PosetKind::quillen: return build_quillen(G, p, limits);
    case PosetKind::sp: return build_sp(G, p, limits);
    case PosetKind::bouc: return build_bouc(G, p, limits);
  }
  throw InvalidInput("posets", "unknown poset kind");
}

/// X^n: the nodes of order at most p^(n+1), with the induced order.
inline SubgroupPoset truncate(const SubgroupPoset& X, unsigned n) {
  BigInt bound = 1;
  for (unsigned i = 0; i <= n; ++i) bound *= X.prime;
  SubgroupPoset T;
  T.kind = X.kind;
  T.prime = X.prime;
  T.parent = X.parent;
  T.truncation = n;
  std::vector<std::int64_t> new_id(X.nodes.size(), -1);
  for (std::size_t i = 0; i < X.nodes.size(); ++i) {
    if (X.nodes[i].order() > bound) continue;
    new_id[i] = static_cast<std::int64_t>(T.nodes.size());
    T.nodes.push_back(X.nodes[i]);
  }
  for (auto [a, b] : X.relations)
    if (new_id[a] >= 0 && new_id[b] >= 0)
      T.relations.emplace_back(static_cast<std::uint32_t>(new_id[a]), static_cast<std::uint32_t>(new_id[b]));
  return T;
}

/// Structural checks on a subgroup poset; returns a description of every
/// violation found (empty when consistent).
inline std::vector<std::string> poset_violations(const SubgroupPoset& X, const Limits& limits = {}) {
  std::vector<std::string> bad;
  try {
    X.abstract().validate();
  } catch (const Error& e) {
    bad.push_back(e.what());
  }
  for (std::size_t i = 0; i < X.nodes.size(); ++i) {
    const Subgroup& H = X.nodes[i];
    if (H.is_trivial()) bad.push_back("node " + std::to_string(i) + " is trivial");
    if (!is_p_power(H.order_u64(), X.prime)) bad.push_back("node " + std::to_string(i) + " is not a p-group");
    if (X.kind == PosetKind::quillen) {
      for (const auto& a : H.generators()) {
        if (a.order() != X.prime) bad.push_back("node " + std::to_string(i) + " has exponent != p");
        for (const auto& b : H.generators())
          if (!commute(a, b)) bad.push_back("node " + std::to_string(i) + " is not abelian");
      }
    }
    if (X.kind == PosetKind::bouc && !X.truncation && !is_p_radical(X.parent, H, X.prime, limits))
      bad.push_back("node " + std::to_string(i) + " is not p-radical");
  }
  // conjugation by each generator of G permutes the nodes and preserves inclusion
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> id;
  for (std::uint32_t i = 0; i < X.nodes.size(); ++i) id.emplace(X.nodes[i].elements(), i);
  std::vector<Relation> sorted_rel = X.relations;
  std::sort(sorted_rel.begin(), sorted_rel.end());
  for (const auto& g : X.parent.generators()) {
    std::vector<std::uint32_t> image(X.nodes.size());
    bool ok = true;
    for (std::uint32_t i = 0; i < X.nodes.size() && ok; ++i) {
      auto it = id.find(X.nodes[i].elements().conjugated(g));
      if (it == id.end()) {
        bad.push_back("conjugation by a generator leaves the node set");
        ok = false;
      } else {
        image[i] = it->second;
      }
    }
    if (!ok) continue;
    for (auto [a, b] : X.relations)
      if (!std::binary_search(sorted_rel.begin(), sorted_rel.end(), Relation{image[a], image[b]})) {
        bad.push_back("conjugation by a generator does not preserve the order relation");
        break;
      }
  }
  return bad;
}

}  // namespace psc
