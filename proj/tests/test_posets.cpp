#include <set>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace psc;

namespace {

std::set<oracle::Elements> node_sets(const SubgroupPoset& X) {
  std::set<oracle::Elements> out;
  for (const auto& n : X.nodes) out.insert(oracle::to_set(n));
  return out;
}

// comparable pairs computed from element sets
std::vector<Relation> brute_relations(const SubgroupPoset& X) {
  std::vector<oracle::Elements> s;
  for (const auto& n : X.nodes) s.push_back(oracle::to_set(n));
  std::vector<Relation> rel;
  for (std::uint32_t i = 0; i < s.size(); ++i)
    for (std::uint32_t j = 0; j < s.size(); ++j)
      if (i != j && s[i].size() < s[j].size() && std::includes(s[j].begin(), s[j].end(), s[i].begin(), s[i].end()))
        rel.emplace_back(i, j);
  return rel;
}

}  // namespace

TEST_CASE("Quillen poset of A5 at p = 2") {
  auto X = build_quillen(resolve("alternating:5"), 2);
  CHECK(X.nodes.size() == 20);
  CHECK(X.relations.size() == 15);
  CHECK(X.relations == brute_relations(X));
}

TEST_CASE("Quillen poset of a cyclic p-group is one point") {
  CHECK(build_quillen(resolve("cyclic:5"), 5).nodes.size() == 1);
  CHECK(build_quillen(resolve("cyclic:9"), 3).nodes.size() == 1);
}

TEST_CASE("Quillen poset of S4 at p = 2 has ranks 1 and 2") {
  auto X = build_quillen(resolve("symmetric:4"), 2);
  std::set<std::uint64_t> orders;
  for (const auto& n : X.nodes) orders.insert(n.order_u64());
  CHECK(orders == std::set<std::uint64_t>{2, 4});
}

TEST_CASE("S_p posets") {
  auto a5 = resolve("alternating:5");
  CHECK(node_sets(build_sp(a5, 2)) == node_sets(build_quillen(a5, 2)));
  auto c9 = build_sp(resolve("cyclic:9"), 3);
  CHECK(c9.nodes.size() == 2);
  CHECK(c9.relations == std::vector<Relation>{{0, 1}});
  auto s4 = resolve("symmetric:4");
  CHECK(build_sp(s4, 2).nodes.size() > build_quillen(s4, 2).nodes.size());
}

TEST_CASE("node sets match brute-force subgroup enumeration") {
  for (auto [spec, p] : {std::pair{"symmetric:4", 2}, {"alternating:5", 2}, {"symmetric:5", 2}, {"symmetric:5", 3},
                         {"alternating:5", 5}, {"dihedral:12", 2}}) {
    INFO(spec << " p=" << p);
    PermGroup G = resolve(spec);
    auto P = static_cast<std::uint64_t>(p);
    auto all = oracle::elements(G);
    std::set<oracle::Elements> ea, sp, radical;
    for (const auto& H : oracle::all_subgroups(G.degree(), all)) {
      if (H.size() == 1 || !oracle::is_p_power(H.size(), P)) continue;
      sp.insert(H);
      if (oracle::is_elementary_abelian(H, P)) ea.insert(H);
      if (oracle::p_core(G.degree(), oracle::normalizer(all, H), P) == H) radical.insert(H);
    }
    auto Q = build_quillen(G, P), S = build_sp(G, P), B = build_bouc(G, P);
    CHECK(node_sets(Q) == ea);
    CHECK(node_sets(S) == sp);
    CHECK(node_sets(B) == radical);
    CHECK(Q.relations == brute_relations(Q));
    CHECK(S.relations == brute_relations(S));
    CHECK(B.relations == brute_relations(B));
  }
}

TEST_CASE("Bouc poset of a p-group is the group itself") {
  auto X = build_bouc(resolve("dihedral:8"), 2);
  REQUIRE(X.nodes.size() == 1);
  CHECK(X.nodes[0].order() == 8);
  auto Y = build_bouc(resolve("wreath2(cyclic:2)"), 2);
  REQUIRE(Y.nodes.size() == 1);
  CHECK(Y.nodes[0].order() == 8);
}

TEST_CASE("Bouc poset of A5 at p = 2") {
  auto X = build_bouc(resolve("alternating:5"), 2);
  CHECK(X.nodes.size() == 5);
  CHECK(X.relations.empty());
  for (const auto& n : X.nodes) CHECK(n.order() == 4);
}

TEST_CASE("Bouc nodes are among the S_p nodes") {
  for (auto [spec, p] : {std::pair{"symmetric:6", 2}, {"alternating:7", 3}, {"data:m11", 3}, {"data:m11", 2},
                         {"wreath2(symmetric:3)", 3}}) {
    INFO(spec << " p=" << p);
    PermGroup G = resolve(spec);
    auto B = node_sets(build_bouc(G, static_cast<std::uint64_t>(p)));
    auto S = node_sets(build_sp(G, static_cast<std::uint64_t>(p)));
    CHECK(std::includes(S.begin(), S.end(), B.begin(), B.end()));
  }
}

TEST_CASE("structural checks hold on the corpus") {
  for (auto [spec, p] : {std::pair{"symmetric:6", 2}, {"alternating:7", 2}, {"alternating:7", 3}, {"data:m11", 3},
                         {"data:m11", 2}, {"wreath2(alternating:5)", 2}, {"product(alternating:5,symmetric:3)", 3}}) {
    for (auto kind : {PosetKind::quillen, PosetKind::sp, PosetKind::bouc}) {
      INFO(spec << " p=" << p << " " << to_string(kind));
      auto X = build_poset(kind, resolve(spec), static_cast<std::uint64_t>(p));
      CHECK(poset_violations(X).empty());
    }
  }
}

TEST_CASE("truncation") {
  auto X = build_quillen(resolve("alternating:5"), 2);
  auto T0 = truncate(X, 0);
  CHECK(T0.nodes.size() == 15);
  CHECK(T0.relations.empty());
  auto T1 = truncate(X, 1);
  CHECK(T1.nodes.size() == X.nodes.size());
  CHECK(T1.relations == X.relations);
  auto S = build_sp(resolve("symmetric:6"), 2);
  auto T = truncate(S, 2);
  for (const auto& n : T.nodes) CHECK(n.order() <= 8);
  CHECK(T.relations == brute_relations(T));
}

TEST_CASE("join of posets") {
  auto two = poset_join(AbstractPoset::antichain(1), AbstractPoset::antichain(1));
  CHECK(two.size == 2);
  CHECK(two.relations == AbstractPoset::chain(2).relations);
  auto j = poset_join(AbstractPoset::antichain(3), AbstractPoset::antichain(4));
  CHECK(j.size == 7);
  CHECK(j.relations.size() == 12);
  j.validate();
  poset_join(AbstractPoset::chain(3), j).validate();
}

TEST_CASE("poset construction is deterministic and thread independent") {
  PermGroup G = resolve("symmetric:7");
  Limits one, four;
  four.threads = 4;
  auto a = build_bouc(G, 2, one), b = build_bouc(G, 2, four);
  REQUIRE(a.nodes.size() == b.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) CHECK(a.nodes[i].key() == b.nodes[i].key());
  CHECK(a.relations == b.relations);
}

TEST_CASE("a prime not dividing the order is rejected") {
  CHECK_THROWS_AS(build_quillen(resolve("alternating:5"), 7), InvalidInput);
  CHECK_THROWS_AS(build_sp(resolve("alternating:5"), 4), InvalidInput);
}
