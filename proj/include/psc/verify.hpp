#pragma once

// Acceptance suite: known ranks and component counts plus the cross-poset
// invariance battery. Default rows run in seconds; extended rows (J1, A10)
// take longer and need a few GB of memory.

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "psc/pipeline.hpp"

namespace psc {

struct AcceptanceRow {
  int id = 0;
  std::string title;
  std::string expected;
  std::string got;
  bool pass = false;
  double seconds = 0;
};

/// S5 and S6 ranks, fixed at the first verified run (each equals betti_1).
inline constexpr std::size_t kQuillenS5Rank = 16;
inline constexpr std::size_t kQuillenS6Rank = 16;

namespace detail {

class RunCache {
 public:
  explicit RunCache(unsigned threads) : threads_(threads) {}

  const RunReport& get(const std::string& spec, std::uint64_t p, PosetKind kind,
                       std::optional<unsigned> trunc = std::nullopt, std::optional<std::size_t> hom = std::nullopt) {
    auto key = std::make_tuple(spec, p, kind, trunc ? static_cast<int>(*trunc) : -1, hom ? static_cast<int>(*hom) : -1);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    RunConfig cfg;
    cfg.group_spec = spec;
    cfg.prime = p;
    cfg.kind = kind;
    cfg.truncation = trunc;
    cfg.homology_dim = hom;
    cfg.limits.threads = threads_;
    return cache_.emplace(key, run(cfg)).first->second;
  }

 private:
  unsigned threads_;
  std::map<std::tuple<std::string, std::uint64_t, PosetKind, int, int>, RunReport> cache_;
};

inline std::string statuses(const RunReport& r) {
  std::string s;
  for (std::size_t i = 0; i < r.pi1.components.size(); ++i) {
    if (i) s += ",";
    s += to_string(r.pi1.components[i].certificate);
  }
  return s;
}

inline bool all_trivial(const RunReport& r) {
  for (const auto& c : r.pi1.components)
    if (c.certificate.status != Pi1Status::trivial) return false;
  return true;
}

inline bool single_free(const RunReport& r, std::size_t rank) {
  return r.pi1.component_count() == 1 && r.pi1.components[0].certificate.status == Pi1Status::free &&
         r.pi1.components[0].certificate.free_rank == rank;
}

inline std::string betti_string(const HomologyReport& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.betti.size(); ++i) s += (i ? "," : "") + std::to_string(h.betti[i]);
  return s + ")";
}

/// (components, abelianization and certificate per component) of one run.
inline std::string invariant_triple(const RunReport& r) {
  std::string s = std::to_string(r.pi1.component_count()) + " comp";
  for (const auto& c : r.pi1.components) s += "; " + to_string(c.abelianization) + " " + to_string(c.certificate);
  return s;
}

}  // namespace detail

/// Runs the rows in order, calling `on_row` as each finishes.
inline std::vector<AcceptanceRow> run_acceptance(bool extended, unsigned threads = 1,
                                                 const std::function<void(const AcceptanceRow&)>& on_row = {}) {
  using detail::RunCache;
  RunCache cache(threads);
  std::vector<AcceptanceRow> rows;
  const auto Q = PosetKind::quillen;

  auto add = [&](int id, std::string title, std::string expected, auto&& body) {
    AcceptanceRow row{id, std::move(title), std::move(expected), "", false, 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      std::tie(row.pass, row.got) = body();
    } catch (const std::exception& e) {
      row.pass = false;
      row.got = std::string("error: ") + e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back(row);
    if (on_row) on_row(rows.back());
  };

  add(1, "A_2(A_5) has 5 simply connected components", "5 components, all trivial, Betti (5,0)", [&] {
    const auto& r = cache.get("alternating:5", 2, Q, std::nullopt, 1);
    std::string got = std::to_string(r.pi1.component_count()) + " components, " + detail::statuses(r) + ", Betti " +
                      detail::betti_string(*r.homology);
    bool ok = r.pi1.component_count() == 5 && detail::all_trivial(r) && r.homology->betti == std::vector<std::size_t>{5, 0} &&
              r.homology->torsion[0].empty() && r.homology->torsion[1].empty();
    return std::pair{ok, got};
  });

  add(2, "A_2(S_4) is connected, simply connected, acyclic", "1 component, trivial, reduced homology 0", [&] {
    const auto& r0 = cache.get("symmetric:4", 2, Q);
    const auto& r = cache.get("symmetric:4", 2, Q, std::nullopt, static_cast<std::size_t>(r0.dimension));
    bool acyclic = r.homology->betti[0] == 1;
    for (std::size_t k = 1; k < r.homology->betti.size(); ++k) acyclic = acyclic && r.homology->betti[k] == 0;
    for (const auto& t : r.homology->torsion) acyclic = acyclic && t.empty();
    std::string got = std::to_string(r.pi1.component_count()) + " component, " + detail::statuses(r) + ", Betti " +
                      detail::betti_string(*r.homology);
    return std::pair{r.pi1.component_count() == 1 && detail::all_trivial(r) && acyclic, got};
  });

  add(3, "A_2(A_6) and A_2(A_7) are free", "free(16), free(176)", [&] {
    const auto& a6 = cache.get("alternating:6", 2, Q);
    const auto& a7 = cache.get("alternating:7", 2, Q);
    return std::pair{detail::single_free(a6, 16) && detail::single_free(a7, 176),
                     detail::statuses(a6) + ", " + detail::statuses(a7)};
  });

  add(4, "A_2(S_n), n = 4..7, simply connected exactly for n = 4, 7",
      "trivial, free(" + std::to_string(kQuillenS5Rank) + "), free(" + std::to_string(kQuillenS6Rank) + "), trivial", [&] {
        const auto& s4 = cache.get("symmetric:4", 2, Q);
        const auto& s5 = cache.get("symmetric:5", 2, Q);
        const auto& s6 = cache.get("symmetric:6", 2, Q);
        const auto& s7 = cache.get("symmetric:7", 2, Q);
        bool ok = s4.pi1.component_count() == 1 && detail::all_trivial(s4) && detail::single_free(s5, kQuillenS5Rank) &&
                  detail::single_free(s6, kQuillenS6Rank) && s7.pi1.component_count() == 1 && detail::all_trivial(s7);
        return std::pair{ok, detail::statuses(s4) + ", " + detail::statuses(s5) + ", " + detail::statuses(s6) + ", " +
                                 detail::statuses(s7)};
      });

  add(5, "A_2(A_5 wr C_2) is free of rank (5-1)(5-1+60)", "free(256)", [&] {
    const auto& r = cache.get("wreath2(alternating:5)", 2, Q);
    return std::pair{detail::single_free(r, 256), detail::statuses(r)};
  });

  add(6, "A_2(A_5 x A_5) is free of rank (5-1)(5-1)", "free(16)", [&] {
    const auto& r = cache.get("product(alternating:5,alternating:5)", 2, Q);
    return std::pair{detail::single_free(r, 16), detail::statuses(r)};
  });

  add(7, "A_3(M_11) is disconnected", "more than 1 component", [&] {
    const auto& r = cache.get("data:m11", 3, Q);
    return std::pair{r.pi1.component_count() > 1, std::to_string(r.pi1.component_count()) + " components"};
  });

  add(8, "invariants agree across quillen, sp, bouc and truncation at 2", "identical triples for 9 groups", [&] {
    const std::vector<std::string> groups{"alternating:5", "symmetric:4",  "alternating:6",
                                          "alternating:7", "symmetric:5",  "symmetric:6",
                                          "symmetric:7",   "wreath2(alternating:5)", "product(alternating:5,alternating:5)"};
    std::string mismatches;
    std::size_t agreeing = 0;
    for (const auto& g : groups) {
      const std::string base = detail::invariant_triple(cache.get(g, 2, Q));
      const std::string others[] = {
          detail::invariant_triple(cache.get(g, 2, PosetKind::sp)),
          detail::invariant_triple(cache.get(g, 2, PosetKind::bouc)),
          detail::invariant_triple(cache.get(g, 2, Q, 2u)),
          detail::invariant_triple(cache.get(g, 2, PosetKind::sp, 2u)),
      };
      bool ok = true;
      for (const auto& o : others) ok = ok && o == base;
      if (ok)
        ++agreeing;
      else
        mismatches += " " + g;
    }
    std::string got = "identical triples for " + std::to_string(agreeing) + " groups";
    if (!mismatches.empty()) got += "; mismatch:" + mismatches;
    return std::pair{agreeing == groups.size(), got};
  });

  if (!extended) return rows;

  add(9, "B_2(J_1) is free of rank 4808", "free(4808)", [&] {
    const auto& r = cache.get("data:j1", 2, PosetKind::bouc);
    return std::pair{detail::single_free(r, 4808), detail::statuses(r)};
  });

  add(10, "B_3(A_10): abelianization Z^25242, torsion-free, residual presented",
      "Z^25242, free factor + residual rank = 25242, presented", [&] {
        const auto& r = cache.get("alternating:10", 3, PosetKind::bouc);
        if (r.pi1.component_count() != 1) return std::pair{false, std::to_string(r.pi1.component_count()) + " components"};
        const auto& c = r.pi1.components[0];
        const Abelianization res = abelianization(c.residual);
        std::ostringstream got;
        got << to_string(c.abelianization) << ", free factor " << c.free_factor_rank << " + residual rank " << res.rank
            << " = " << c.free_factor_rank + res.rank << ", " << to_string(c.certificate.status) << " (residual "
            << c.residual.generator_count << " generators / " << c.residual.relators.size() << " relators)";
        bool ok = c.abelianization.rank == 25242 && c.abelianization.torsion.empty() && res.torsion.empty() &&
                  c.free_factor_rank + res.rank == 25242 && c.certificate.status == Pi1Status::presented &&
                  c.residual.generator_count > 0;
        return std::pair{ok, got.str()};
      });
  return rows;
}

inline std::string format_row(const AcceptanceRow& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << "\n        expected: " << r.expected
    << "\n        got:      " << r.got << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
  return s.str();
}

}  // namespace psc
