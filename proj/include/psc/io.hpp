#pragma once

// JSON exports of posets, complexes and run reports.

#include <string>

#include "json.hpp"

#include "psc/complex.hpp"
#include "psc/pipeline.hpp"
#include "psc/posets.hpp"

namespace psc {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json big_to_json(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(x);
  return x.str();
}

inline Json bigs_to_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(big_to_json(x));
  return a;
}

}  // namespace detail

/// {kind, prime, group_spec, nodes: [{id, order, generator_images}], relations}
inline Json poset_to_json(const SubgroupPoset& X, const std::string& group_spec) {
  Json j;
  j["kind"] = to_string(X.kind);
  j["prime"] = X.prime;
  j["group_spec"] = group_spec;
  if (X.truncation) j["truncation"] = *X.truncation;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < X.nodes.size(); ++i) {
    Json gens = Json::array();
    for (const auto& g : X.nodes[i].generators()) {
      Json img = Json::array();
      for (auto x : g.images()) img.push_back(static_cast<unsigned>(x) + 1);
      gens.push_back(std::move(img));
    }
    nodes.push_back(Json{{"id", i}, {"order", detail::big_to_json(X.nodes[i].order())}, {"generator_images", gens}});
  }
  j["nodes"] = std::move(nodes);
  Json rel = Json::array();
  for (auto [a, b] : X.relations) rel.push_back(Json::array({a, b}));
  j["relations"] = std::move(rel);
  return j;
}

/// {vertices, maximal_simplices}
inline Json complex_to_json(const SimplicialComplex& K) {
  Json j;
  j["vertices"] = K.vertex_count();
  j["maximal_simplices"] = K.maximal_simplices();
  return j;
}

inline Json abelianization_to_json(const Abelianization& a) {
  return Json{{"rank", a.rank}, {"torsion", detail::bigs_to_json(a.torsion)}};
}

inline Json component_to_json(const ComponentPi1& c) {
  Json j;
  j["status"] = to_string(c.certificate.status);
  switch (c.certificate.status) {
    case Pi1Status::trivial: break;
    case Pi1Status::free: j["free_rank"] = c.certificate.free_rank; break;
    case Pi1Status::presented:
      j["generators"] = c.residual.generator_count;
      j["relators"] = c.residual.relators.size();
      j["free_factor_rank"] = c.free_factor_rank;
      break;
  }
  j["abelianization"] = abelianization_to_json(c.abelianization);
  return j;
}

/// {group_spec, prime, poset_kind, components, per_component, homology?, euler}
inline Json report_to_json(const RunReport& r) {
  Json j;
  j["group_spec"] = r.group_spec;
  j["prime"] = r.prime;
  j["poset_kind"] = to_string(r.kind);
  if (r.truncation) j["truncation"] = *r.truncation;
  j["components"] = r.pi1.component_count();
  Json per = Json::array();
  for (const auto& c : r.pi1.components) per.push_back(component_to_json(c));
  j["per_component"] = std::move(per);
  if (r.homology) {
    Json tor = Json::array();
    for (const auto& t : r.homology->torsion) tor.push_back(detail::bigs_to_json(t));
    j["homology"] = Json{{"betti", r.homology->betti}, {"torsion", std::move(tor)}, {"reduced", r.homology->reduced}};
  }
  j["euler"] = r.euler;
  if (r.violations) j["invariant_violations"] = *r.violations;
  return j;
}

/// Human-readable summary.
inline std::string report_to_text(const RunReport& r) {
  std::string s;
  s += "group      " + r.group_spec + "  (order " + r.group_order.str() + ", degree " + std::to_string(r.group_degree) + ")\n";
  s += "poset      " + to_string(r.kind) + " p=" + std::to_string(r.prime);
  if (r.truncation) s += " truncated at " + std::to_string(*r.truncation);
  s += ", " + std::to_string(r.poset_size) + " nodes, " + std::to_string(r.poset_relations) + " comparable pairs\n";
  s += "complex    " + std::to_string(r.vertices) + " vertices, " + std::to_string(r.maximal_simplices) +
       " maximal simplices, dimension " + std::to_string(r.dimension) + ", euler " + std::to_string(r.euler) + "\n";
  s += "components " + std::to_string(r.pi1.component_count()) + "\n";
  for (std::size_t i = 0; i < r.pi1.components.size(); ++i) {
    const auto& c = r.pi1.components[i];
    s += "  [" + std::to_string(i) + "] pi_1 " + to_string(c.certificate);
    if (c.certificate.status == Pi1Status::presented)
      s += " (free factor " + std::to_string(c.free_factor_rank) + ", residual " +
           std::to_string(c.residual.generator_count) + " generators / " + std::to_string(c.residual.relators.size()) +
           " relators)";
    s += ", abelianization " + to_string(c.abelianization) + "\n";
  }
  if (r.homology) {
    s += "homology   (unreduced)";
    for (std::size_t k = 0; k < r.homology->betti.size(); ++k) {
      s += " H" + std::to_string(k) + "=Z^" + std::to_string(r.homology->betti[k]);
      for (const auto& t : r.homology->torsion[k]) s += "+Z/" + t.str();
    }
    s += "\n";
  }
  if (r.violations) {
    s += "invariants " + std::string(r.violations->empty() ? "ok" : "VIOLATED") + "\n";
    for (const auto& v : *r.violations) s += "  " + v + "\n";
  }
  return s;
}

}  // namespace psc
