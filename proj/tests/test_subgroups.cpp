#include <set>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace psc;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<int>> c) { return Permutation::from_cycles(n, c); }

std::set<oracle::Elements> as_sets(const std::vector<Subgroup>& subs) {
  std::set<oracle::Elements> out;
  for (const auto& h : subs) out.insert(oracle::to_set(h));
  return out;
}

// D8 as a subgroup of S4
Subgroup d8() { return Subgroup::generated(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})}); }

}  // namespace

TEST_CASE("subgroup keys identify element sets") {
  Subgroup a = Subgroup::generated(4, {cyc(4, {{1, 2, 3, 4}})});
  Subgroup b = Subgroup::generated(4, {cyc(4, {{1, 4, 3, 2}})});
  Subgroup c = Subgroup::generated(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
  CHECK(a.key() == b.key());
  CHECK_FALSE(a.key() == c.key());
  CHECK(a.order() == 4);
  CHECK(oracle::to_set(a) == oracle::closure(4, a.generators()));
}

TEST_CASE("Sylow subgroups have the full p-part") {
  struct Case {
    const char* spec;
    std::uint64_t p;
    std::uint64_t order;
  };
  for (auto c : {Case{"symmetric:4", 2, 8}, Case{"alternating:10", 3, 81}, Case{"alternating:5", 2, 4},
                 Case{"data:m11", 3, 9}, Case{"data:m11", 2, 16}, Case{"symmetric:7", 2, 16},
                 Case{"data:j1", 2, 8}, Case{"wreath2(alternating:5)", 2, 32}}) {
    INFO(c.spec << " p=" << c.p);
    PermGroup G = resolve(c.spec);
    Subgroup S = sylow(G, c.p);
    CHECK(S.order() == c.order);
    for (const auto& g : S.generators()) CHECK(G.contains(g));
    CHECK(oracle::closure(G.degree(), S.generators()).size() == c.order);
  }
  CHECK_THROWS_AS(sylow(resolve("alternating:5"), 7), InvalidInput);
}

TEST_CASE("Sylow 2 of A5 is a Klein four-group, as are all order-4 subgroups") {
  PermGroup A5 = resolve("alternating:5");
  auto S = oracle::to_set(sylow(A5, 2));
  CHECK(oracle::is_elementary_abelian(S, 2));
  for (const auto& H : oracle::all_subgroups(5, oracle::elements(A5)))
    if (H.size() == 4) CHECK(oracle::is_elementary_abelian(H, 2));
}

TEST_CASE("normalizers satisfy orbit-stabilizer and match brute force") {
  struct Case {
    const char* spec;
    Subgroup H;
    std::uint64_t order;
  };
  PermGroup A5 = resolve("alternating:5"), S4 = resolve("symmetric:4");
  std::vector<Case> cases{{"alternating:5", sylow(A5, 2), 12},
                          {"symmetric:4", Subgroup::generated(4, {cyc(4, {{1, 2}, {3, 4}})}), 8},
                          {"symmetric:4", p_core(S4, 2), 24}};
  for (auto& c : cases) {
    INFO(c.spec);
    PermGroup G = resolve(c.spec);
    Subgroup N = normalizer(G, c.H);
    CHECK(N.order() == c.order);
    CHECK(oracle::to_set(N) == oracle::normalizer(oracle::elements(G), oracle::to_set(c.H)));
    CHECK(conjugation_orbit(G, c.H).size() * N.order() == G.order());
  }
}

TEST_CASE("p-cores equal the intersection of the Sylow subgroups") {
  struct Case {
    const char* spec;
    std::uint64_t p;
    std::uint64_t order;
  };
  for (auto c : {Case{"symmetric:4", 2, 4}, Case{"alternating:5", 2, 1}, Case{"alternating:4", 2, 4},
                 Case{"dihedral:8", 2, 8}, Case{"symmetric:3", 3, 3}, Case{"product(symmetric:3,cyclic:2)", 2, 2}}) {
    INFO(c.spec << " p=" << c.p);
    PermGroup G = resolve(c.spec);
    Subgroup O = p_core(G, c.p);
    CHECK(O.order() == c.order);
    CHECK(oracle::to_set(O) == oracle::p_core(G.degree(), oracle::elements(G), c.p));
  }
}

TEST_CASE("p-core lies in every Sylow conjugate") {
  for (auto [spec, p] : {std::pair{"symmetric:4", 2}, {"symmetric:5", 2}, {"alternating:6", 3},
                         {"wreath2(symmetric:3)", 2}, {"wreath2(symmetric:3)", 3}}) {
    INFO(spec << " p=" << p);
    PermGroup G = resolve(spec);
    Subgroup O = p_core(G, static_cast<std::uint64_t>(p));
    for (const auto& S : expand_conjugates(G, sylow(G, static_cast<std::uint64_t>(p))))
      CHECK(O.is_subgroup_of(S));
  }
}

TEST_CASE("subgroups of small p-groups") {
  Subgroup v4 = Subgroup::generated(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
  CHECK(all_subgroups_of_p_group(v4).size() == 4);
  Subgroup e8 = Subgroup::generated(6, {cyc(6, {{1, 2}}), cyc(6, {{3, 4}}), cyc(6, {{5, 6}})});
  CHECK(all_subgroups_of_p_group(e8).size() == 15);
  auto d = all_subgroups_of_p_group(d8());
  CHECK(d.size() == 9);
  auto brute = oracle::all_subgroups(4, oracle::to_set(d8()));
  brute.erase(oracle::Elements{Permutation(4)});
  CHECK(as_sets(d) == brute);
}

TEST_CASE("subgroups of Sylow subgroups match brute force") {
  for (auto [spec, p] : {std::pair{"symmetric:6", 2}, {"symmetric:7", 2}, {"alternating:7", 3},
                         {"wreath2(alternating:5)", 2}, {"data:m11", 3}}) {
    INFO(spec << " p=" << p);
    PermGroup G = resolve(spec);
    Subgroup S = sylow(G, static_cast<std::uint64_t>(p));
    auto mine = all_subgroups_of_p_group(S);
    auto brute = oracle::all_subgroups(G.degree(), oracle::to_set(S));
    brute.erase(oracle::Elements{Permutation(G.degree())});
    CHECK(as_sets(mine) == brute);
    for (const auto& h : mine) CHECK(S.order() % h.order() == 0);
  }
}

TEST_CASE("elementary abelian subgroups: examples") {
  auto a5 = elementary_abelian_subgroups(resolve("alternating:5"), 2);
  CHECK(a5.size() == 20);
  CHECK(std::count_if(a5.begin(), a5.end(), [](const Subgroup& h) { return h.order() == 2; }) == 15);
  CHECK(elementary_abelian_subgroups(resolve("cyclic:9"), 3).size() == 1);
  CHECK(elementary_abelian_subgroups(resolve("symmetric:4"), 3).size() == 4);
}

TEST_CASE("elementary abelian subgroups agree with the Sylow-conjugate oracle") {
  for (auto [spec, p] : {std::pair{"symmetric:4", 2}, {"symmetric:5", 2}, {"alternating:6", 2}, {"symmetric:6", 3},
                         {"symmetric:7", 2}, {"alternating:7", 3}, {"dihedral:12", 2}, {"product(symmetric:3,symmetric:3)", 3}}) {
    INFO(spec << " p=" << p);
    PermGroup G = resolve(spec);
    auto P = static_cast<std::uint64_t>(p);
    std::set<oracle::Elements> expected;
    for (const auto& S : expand_conjugates(G, sylow(G, P))) {
      for (const auto& H : oracle::all_subgroups(G.degree(), oracle::to_set(S)))
        if (H.size() > 1 && oracle::is_elementary_abelian(H, P)) expected.insert(H);
    }
    CHECK(as_sets(elementary_abelian_subgroups(G, P)) == expected);
  }
}

TEST_CASE("conjugacy dedupe and expansion") {
  PermGroup A5 = resolve("alternating:5");
  auto sylows = expand_conjugates(A5, sylow(A5, 2));
  CHECK(sylows.size() == 5);
  CHECK(dedupe_by_conjugacy(A5, sylows).size() == 1);
  CHECK(dedupe_by_conjugacy(A5, elementary_abelian_subgroups(A5, 2)).size() == 2);
  CHECK(dedupe_by_conjugacy(A5, {}).empty());
  CHECK(expand_conjugates(A5, Subgroup::from_group(A5)).size() == 1);

  PermGroup A10 = resolve("alternating:10");
  Subgroup S = sylow(A10, 3);
  CHECK(expand_conjugates(A10, S).size() * normalizer(A10, S).order() == A10.order());
}

TEST_CASE("dedupe then expand recovers the input") {
  for (auto [spec, p] : {std::pair{"symmetric:5", 2}, {"alternating:7", 3}, {"symmetric:6", 2}}) {
    INFO(spec);
    PermGroup G = resolve(spec);
    auto subs = elementary_abelian_subgroups(G, static_cast<std::uint64_t>(p));
    std::set<oracle::Elements> back;
    for (const auto& r : dedupe_by_conjugacy(G, subs))
      for (const auto& m : expand_conjugates(G, r)) back.insert(oracle::to_set(m));
    CHECK(back == as_sets(subs));
  }
}

TEST_CASE("radical subgroups of A5 at p = 2 by brute force") {
  PermGroup A5 = resolve("alternating:5");
  auto all = oracle::elements(A5);
  std::set<oracle::Elements> radical;
  for (const auto& H : oracle::all_subgroups(5, all)) {
    if (H.size() == 1 || !oracle::is_p_power(H.size(), 2)) continue;
    auto N = oracle::normalizer(all, H);
    if (oracle::p_core(5, N, 2) == H) radical.insert(H);
  }
  CHECK(radical.size() == 5);
  for (const auto& H : radical) CHECK(H.size() == 4);
  auto bouc = build_bouc(A5, 2);
  std::set<oracle::Elements> mine;
  for (const auto& n : bouc.nodes) mine.insert(oracle::to_set(n));
  CHECK(mine == radical);
}
