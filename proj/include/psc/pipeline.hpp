#pragma once

// group -> poset -> order complex -> topology, as driven by the CLI.

#include <optional>
#include <string>
#include <vector>

#include "psc/complex.hpp"
#include "psc/errors.hpp"
#include "psc/group_spec.hpp"
#include "psc/posets.hpp"
#include "psc/topology.hpp"

namespace psc {

struct RunConfig {
  std::string group_spec;
  std::uint64_t prime = 2;
  PosetKind kind = PosetKind::quillen;
  std::optional<unsigned> truncation;
  std::optional<std::size_t> homology_dim;
  bool check_invariants = false;
  Limits limits;

  /// Throws InvalidInput on a malformed configuration.
  void validate() const {
    if (!is_prime(prime)) throw InvalidInput("cli", "--prime " + std::to_string(prime) + " is not prime");
    const std::uint64_t caps[] = {limits.elements, limits.subgroup_elements, limits.orbit, limits.p_group_order,
                                  limits.subgroup_count, limits.chains, limits.matrix_entries, limits.dense_matrix,
                                  limits.relator_length};
    for (auto c : caps)
      if (c == 0) throw InvalidInput("cli", "caps must be positive");
    if (limits.threads == 0) throw InvalidInput("cli", "--threads must be positive");
  }
};

struct RunReport {
  std::string group_spec;  // canonical rendering
  std::uint64_t prime = 2;
  PosetKind kind = PosetKind::quillen;
  std::optional<unsigned> truncation;
  BigInt group_order;
  std::size_t group_degree = 0;
  std::size_t poset_size = 0;
  std::size_t poset_relations = 0;
  std::size_t vertices = 0;
  std::size_t maximal_simplices = 0;
  int dimension = -1;
  Pi1Report pi1;
  std::optional<HomologyReport> homology;
  std::int64_t euler = 0;
  std::optional<std::vector<std::string>> violations;  // present when invariants were checked
};

struct RunArtifacts {
  PermGroup group;
  SubgroupPoset poset;
  SimplicialComplex complex;
};

/// Consistency checks between the stages of one run; returns the violations.
inline std::vector<std::string> pipeline_violations(const SubgroupPoset& X, const SimplicialComplex& K,
                                                    const Pi1Report& pi1, const Limits& limits) {
  std::vector<std::string> bad = poset_violations(X, limits);
  if (K.dimension() >= 1 && K.skeleton(1).size() != X.relations.size())
    bad.push_back("edge count of the order complex differs from the comparable-pair count");
  if (!pi1.abelianizations_agree) bad.push_back("components have different pi_1 abelianizations");

  // edge-path bookkeeping: generators - relators = 1 - chi(2-skeleton) per component
  const auto comp = components(K);
  std::vector<std::int64_t> chi2(comp.count, 0);
  for (std::size_t k = 0; k <= 2 && static_cast<int>(k) <= K.dimension(); ++k) {
    const SimplexList& s = K.skeleton(k);
    for (std::size_t i = 0; i < s.size(); ++i) chi2[comp.of[s[i][0]]] += (k % 2 == 0) ? 1 : -1;
  }
  auto raw = pi1_presentations(K);
  for (std::size_t c = 0; c < comp.count; ++c) {
    const auto& r = pi1.components[c];
    if (static_cast<std::int64_t>(r.raw_generators) - static_cast<std::int64_t>(r.raw_relators) != 1 - chi2[c])
      bad.push_back("component " + std::to_string(c) + ": generator/relator count disagrees with the Euler characteristic");
    if (!(abelianization(raw[c], limits) == r.abelianization))
      bad.push_back("component " + std::to_string(c) + ": abelianization changed under Tietze simplification");
  }

  // Hurewicz: H_1 is the direct sum of the component abelianizations
  if (K.dimension() >= 1) {
    auto h = homology(K, 1, limits);
    std::size_t rank = 0;
    std::vector<BigInt> tor;
    for (const auto& r : pi1.components) {
      rank += r.abelianization.rank;
      tor.insert(tor.end(), r.abelianization.torsion.begin(), r.abelianization.torsion.end());
    }
    std::vector<BigInt> inv;
    for (auto& t : detail::invariant_factors(tor))
      if (t > 1) inv.push_back(t);
    if (h.betti[0] != comp.count) bad.push_back("betti_0 differs from the component count");
    if (h.betti[1] != rank || h.torsion[1] != inv) bad.push_back("H_1 differs from the pi_1 abelianization");
  }
  return bad;
}

inline RunReport run(const RunConfig& cfg, RunArtifacts* keep = nullptr) {
  cfg.validate();
  const GroupSpec spec = parse_group_spec(cfg.group_spec);
  PermGroup G = resolve(spec);
  SubgroupPoset X = build_poset(cfg.kind, G, cfg.prime, cfg.limits);
  if (cfg.truncation) X = truncate(X, *cfg.truncation);
  if (X.nodes.empty()) throw InvalidInput("posets", "the poset is empty");
  SimplicialComplex K = order_complex(X, cfg.limits);

  RunReport r;
  r.group_spec = render(spec);
  r.prime = cfg.prime;
  r.kind = cfg.kind;
  r.truncation = cfg.truncation;
  r.group_order = G.order();
  r.group_degree = G.degree();
  r.poset_size = X.nodes.size();
  r.poset_relations = X.relations.size();
  r.vertices = K.vertex_count();
  r.maximal_simplices = K.maximal_simplices().size();
  r.dimension = K.dimension();
  r.pi1 = fundamental_groups(K, cfg.limits);
  if (cfg.homology_dim) {
    const auto d = std::min<std::size_t>(*cfg.homology_dim, static_cast<std::size_t>(K.dimension()));
    r.homology = homology(K, d, cfg.limits);
  }
  r.euler = euler_characteristic(K);
  if (cfg.check_invariants) {
    r.violations = pipeline_violations(X, K, r.pi1, cfg.limits);
    if (r.homology && r.homology->betti.size() == static_cast<std::size_t>(K.dimension()) + 1) {
      std::int64_t chi = 0;
      for (std::size_t i = 0; i < r.homology->betti.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(r.homology->betti[i]);
      if (chi != r.euler) r.violations->push_back("Euler characteristic differs from the alternating Betti sum");
    }
  }
  if (keep) *keep = RunArtifacts{std::move(G), std::move(X), std::move(K)};
  return r;
}

}  // namespace psc
