#pragma once

// Subgroups of a permutation group: exact element-set fingerprints, closure,
// Sylow subgroups, normalizers, p-cores, conjugacy classes of subgroups and
// subgroup enumeration inside p-groups.

#include <algorithm>
#include <compare>
#include <cstring>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "psc/errors.hpp"
#include "psc/perm_group.hpp"
#include "psc/permutation.hpp"

namespace psc {

namespace detail {

inline bool row_less(const Point* a, const Point* b, std::size_t n) {
  return std::lexicographical_compare(a, a + n, b, b + n);
}

/// Sorts the rows of a flat row-major table and removes duplicates.
inline std::vector<Point> sort_rows(std::size_t degree, const std::vector<Point>& flat) {
  if (degree == 0) return flat;
  const std::size_t m = flat.size() / degree;
  std::vector<std::uint32_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0u);
  const Point* d = flat.data();
  std::sort(idx.begin(), idx.end(),
            [&](std::uint32_t a, std::uint32_t b) { return row_less(d + a * degree, d + b * degree, degree); });
  std::vector<Point> out;
  out.reserve(flat.size());
  for (std::size_t k = 0; k < m; ++k) {
    const Point* r = d + idx[k] * degree;
    if (k > 0 && std::equal(r, r + degree, out.end() - static_cast<std::ptrdiff_t>(degree))) continue;
    out.insert(out.end(), r, r + degree);
  }
  return out;
}

}  // namespace detail

/// A set of permutations stored as a sorted flat table of image rows. Sorting
/// rows lexicographically is the same as sorting by lexicographic rank, so the
/// table itself is the canonical fingerprint. Copies share storage.
class ElementSet {
 public:
  ElementSet() : flat_(std::make_shared<const std::vector<Point>>()) {}

  static ElementSet from_sorted_flat(std::size_t degree, std::vector<Point> flat) {
    ElementSet s;
    s.degree_ = degree;
    s.hash_ = hash_points(flat, 1469598103934665603ULL ^ degree);
    s.flat_ = std::make_shared<const std::vector<Point>>(std::move(flat));
    return s;
  }

  static ElementSet from_flat(std::size_t degree, const std::vector<Point>& flat) {
    return from_sorted_flat(degree, detail::sort_rows(degree, flat));
  }

  static ElementSet from_permutations(std::size_t degree, const std::vector<Permutation>& elems) {
    std::vector<Point> flat;
    flat.reserve(elems.size() * degree);
    for (const auto& e : elems) flat.insert(flat.end(), e.images().begin(), e.images().end());
    return from_flat(degree, flat);
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return degree_ == 0 ? 0 : flat_->size() / degree_; }
  std::uint64_t hash() const noexcept { return hash_; }
  std::span<const Point> flat() const noexcept { return *flat_; }

  std::span<const Point> row(std::size_t i) const noexcept {
    return std::span<const Point>(flat_->data() + i * degree_, degree_);
  }
  Permutation element(std::size_t i) const {
    auto r = row(i);
    return Permutation::unchecked(std::vector<Point>(r.begin(), r.end()));
  }

  bool contains(std::span<const Point> images) const noexcept {
    if (images.size() != degree_) return false;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      const Point* r = flat_->data() + mid * degree_;
      if (detail::row_less(r, images.data(), degree_))
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo < size() && std::equal(images.begin(), images.end(), flat_->data() + lo * degree_);
  }
  bool contains(const Permutation& g) const noexcept { return contains(g.images()); }

  /// {g^-1 x g : x in this}.
  ElementSet conjugated(const Permutation& g) const {
    std::vector<Point> ginv(degree_);
    auto gi = g.images();
    for (std::size_t i = 0; i < degree_; ++i) ginv[gi[i]] = static_cast<Point>(i);
    std::vector<Point> out(flat_->size());
    const Point* d = flat_->data();
    for (std::size_t r = 0; r < size(); ++r) {
      const Point* x = d + r * degree_;
      Point* y = out.data() + r * degree_;
      for (std::size_t p = 0; p < degree_; ++p) y[p] = ginv[x[gi[p]]];
    }
    return from_flat(degree_, out);
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.hash_ == b.hash_ && a.degree_ == b.degree_ && (a.flat_ == b.flat_ || *a.flat_ == *b.flat_);
  }
  /// Orders by size first, then by the row table.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.flat_->begin(), a.flat_->end(), b.flat_->begin(),
                                                  b.flat_->end());
  }

 private:
  std::size_t degree_ = 0;
  std::shared_ptr<const std::vector<Point>> flat_;
  std::uint64_t hash_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return static_cast<std::size_t>(s.hash()); }
};

/// Canonical subgroup fingerprint: the sorted element table when the subgroup
/// is materialized, else the sorted generator table (exact only for
/// materialized subgroups, which is all the poset machinery uses).
struct SubgroupKey {
  bool materialized = true;
  ElementSet fingerprint;

  friend bool operator==(const SubgroupKey&, const SubgroupKey&) = default;
  friend std::strong_ordering operator<=>(const SubgroupKey& a, const SubgroupKey& b) noexcept {
    if (a.materialized != b.materialized) return a.materialized ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.fingerprint <=> b.fingerprint;
  }
};

struct SubgroupKeyHash {
  std::size_t operator()(const SubgroupKey& k) const noexcept {
    return static_cast<std::size_t>(k.fingerprint.hash() ^ (k.materialized ? 0 : 0x9e3779b97f4a7c15ULL));
  }
};

/// Closure of `seed` (a subgroup, as a set) together with `gens` under
/// multiplication, or nullopt once the result would exceed `cap` elements.
inline std::optional<std::vector<Permutation>> close_under(std::size_t degree, std::vector<Permutation> seed,
                                                           std::span<const Permutation> gens, std::uint64_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen(seed.begin(), seed.end());
  if (seen.empty()) {
    seed.emplace_back(degree);
    seen.insert(seed.back());
  }
  std::vector<Permutation> elems = std::move(seed);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      Permutation x = elems[i] * s;
      if (seen.insert(x).second) {
        if (elems.size() >= cap) return std::nullopt;
        elems.push_back(std::move(x));
      }
    }
  }
  return elems;
}

/// A subgroup of some parent permutation group. Materialized subgroups carry
/// their sorted element table; larger ones (normalizers, typically) carry a
/// stabilizer chain instead. Immutable; copies share storage.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup trivial(std::size_t degree) {
    return from_elements(ElementSet::from_permutations(degree, {Permutation(degree)}), {});
  }

  /// From a complete element table. When `gens` is empty a canonical
  /// generating set is chosen greedily along the sorted table.
  static Subgroup from_elements(ElementSet elems, std::vector<Permutation> gens) {
    Subgroup h;
    h.degree_ = elems.degree();
    h.order_ = elems.size();
    if (gens.empty()) gens = canonical_generators(elems);
    std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });
    h.generators_ = std::move(gens);
    h.elements_ = std::move(elems);
    return h;
  }

  /// Subgroup generated by `gens`, materialized when it has at most
  /// limits.subgroup_elements elements.
  static Subgroup generated(std::size_t degree, std::vector<Permutation> gens, const Limits& limits = {}) {
    std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });
    auto closed = close_under(degree, {}, gens, limits.subgroup_elements);
    if (closed) return from_elements(ElementSet::from_permutations(degree, *closed), std::move(gens));
    return from_group(PermGroup(degree, std::move(gens)), limits);
  }

  static Subgroup from_group(const PermGroup& g, const Limits& limits = {}) {
    if (g.order() <= limits.subgroup_elements) {
      std::vector<Permutation> elems;
      for_each_element(g, [&](const Permutation& x) {
        elems.push_back(x);
        return true;
      });
      Subgroup h = from_elements(ElementSet::from_permutations(g.degree(), elems), g.generators());
      h.group_ = std::make_shared<const PermGroup>(g);
      return h;
    }
    Subgroup h;
    h.degree_ = g.degree();
    h.order_ = g.order();
    h.generators_ = g.generators();
    h.group_ = std::make_shared<const PermGroup>(g);
    return h;
  }

  std::size_t degree() const noexcept { return degree_; }
  const BigInt& order() const noexcept { return order_; }
  std::uint64_t order_u64() const { return to_u64(order_, "subgroup order"); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool is_materialized() const noexcept { return elements_.has_value(); }
  bool is_trivial() const noexcept { return order_ == 1; }

  const ElementSet& elements() const {
    if (!elements_) throw CapExceeded("subgroups", "subgroup elements", "--cap-subgroup-elements", to_u64(order_));
    return *elements_;
  }

  SubgroupKey key() const {
    if (elements_) return {true, *elements_};
    return {false, ElementSet::from_permutations(degree_, generators_)};
  }

  bool contains(const Permutation& g) const {
    if (elements_) return elements_->contains(g);
    return group_->contains(g);
  }

  /// H <= K, tested on the generators of H.
  bool is_subgroup_of(const Subgroup& K) const {
    if (order_ > K.order_) return false;
    for (const auto& g : generators_)
      if (!K.contains(g)) return false;
    return true;
  }

  /// The subgroup as a standalone permutation group with a chain.
  PermGroup group() const {
    if (group_) return *group_;
    return PermGroup(degree_, generators_);
  }

  /// g^-1 H g.
  Subgroup conjugated(const Permutation& g) const {
    std::vector<Permutation> gens;
    gens.reserve(generators_.size());
    for (const auto& x : generators_) gens.push_back(conjugate(x, g));
    if (elements_) return from_elements(elements_->conjugated(g), std::move(gens));
    return from_group(PermGroup(degree_, std::move(gens)), Limits{.subgroup_elements = 0});
  }

 private:
  static std::vector<Permutation> canonical_generators(const ElementSet& elems) {
    std::vector<Permutation> gens;
    const std::size_t n = elems.degree();
    std::vector<Permutation> current{Permutation(n)};
    std::unordered_set<Permutation, PermutationHash> in_current(current.begin(), current.end());
    for (std::size_t i = 0; i < elems.size() && current.size() < elems.size(); ++i) {
      Permutation e = elems.element(i);
      if (in_current.count(e)) continue;
      gens.push_back(e);
      current = *close_under(n, std::move(current), gens, elems.size());
      in_current = {current.begin(), current.end()};
    }
    return gens;
  }

  std::size_t degree_ = 0;
  BigInt order_ = 1;
  std::vector<Permutation> generators_;
  std::optional<ElementSet> elements_;
  std::shared_ptr<const PermGroup> group_;
};

inline bool is_p_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Largest power of p dividing n.
inline BigInt p_part(BigInt n, std::uint64_t p) {
  BigInt r = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Conjugation orbit of a materialized subgroup, as element tables.
using SubgroupOrbit = Orbit<ElementSet, ElementSetHash>;

inline SubgroupOrbit conjugation_orbit(const PermGroup& G, const Subgroup& H, const Limits& limits = {}) {
  return SubgroupOrbit(
      H.elements(), G.generators(), [](const ElementSet& s, const Permutation& g) { return s.conjugated(g); },
      Side::right, limits.orbit, "subgroups");
}

/// N_G(H) via orbit-stabilizer on the conjugation orbit of H: Schreier
/// generators are added to H until the order reaches |G| / |orbit|.
inline PermGroup normalizer_group(const PermGroup& G, const Subgroup& H, const Limits& limits = {}) {
  if (H.degree() != G.degree()) throw InvalidInput("subgroups", "normalizer: degree mismatch");
  SubgroupOrbit orb = conjugation_orbit(G, H, limits);
  if (G.order() % orb.size() != 0) throw Error("subgroups", "normalizer: orbit length does not divide |G|");
  const BigInt target = G.order() / orb.size();
  auto chain = std::make_shared<StabilizerChain>(G.degree());
  std::vector<Permutation> gens;
  for (const auto& h : H.generators())
    if (chain->add_generator(h)) gens.push_back(h);
  if (chain->order() < target) {
    orb.for_each_schreier_generator([&](const Permutation& s) {
      if (chain->add_generator(s)) gens.push_back(s);
      return chain->order() < target;
    });
  }
  if (chain->order() * orb.size() != G.order())
    throw Error("subgroups", "normalizer: |orbit| * |N| != |G|");
  return PermGroup(std::move(gens), std::move(chain));
}

inline Subgroup normalizer(const PermGroup& G, const Subgroup& H, const Limits& limits = {}) {
  return Subgroup::from_group(normalizer_group(G, H, limits), limits);
}

/// A Sylow p-subgroup of G containing the p-subgroup `start` (trivial by
/// default). P grows one factor p at a time: some element of N_G(P) outside P
/// has p-power order modulo P, found by scanning N_G(P) in its fixed element
/// order.
inline Subgroup sylow(const PermGroup& G, std::uint64_t p, const Limits& limits = {},
                      std::optional<Subgroup> start = std::nullopt) {
  if (!is_prime(p)) throw InvalidInput("subgroups", std::to_string(p) + " is not prime");
  const BigInt target = p_part(G.order(), p);
  if (target == 1)
    throw InvalidInput("subgroups", "p = " + std::to_string(p) + " does not divide |G| = " + G.order().str());
  Subgroup P = start ? *start : Subgroup::trivial(G.degree());
  while (P.order() < target) {
    PermGroup M = P.is_trivial() ? G : normalizer_group(G, P, limits);
    std::optional<Permutation> found;
    for_each_element(M, [&](const Permutation& y) {
      if (P.contains(y)) return true;
      // k = order of yP in M/P
      std::uint64_t k = 1;
      Permutation power = y;
      while (!P.contains(power)) {
        power = power * y;
        ++k;
      }
      if (k % p != 0) return true;
      found = y.pow(static_cast<std::int64_t>(k / p));
      return false;
    });
    if (!found) throw Error("subgroups", "sylow: no p-element found in N_G(P) \\ P");
    std::vector<Permutation> gens = P.generators();
    gens.push_back(*found);
    std::vector<Permutation> seed;
    for (std::size_t r = 0; r < P.elements().size(); ++r) seed.push_back(P.elements().element(r));
    auto closed = close_under(G.degree(), std::move(seed), gens, limits.subgroup_elements);
    if (!closed) throw CapExceeded("subgroups", "subgroup elements", "--cap-subgroup-elements", limits.subgroup_elements);
    P = Subgroup::from_elements(ElementSet::from_permutations(G.degree(), *closed), std::move(gens));
  }
  return P;
}

/// The normal core of the p-subgroup S in G: {x in S : x^g in S for all g},
/// i.e. the intersection of the G-conjugates of S. Computed by filtering S
/// until it is closed under conjugation by the generators of G and their
/// inverses.
inline Subgroup normal_core(const PermGroup& G, const Subgroup& S) {
  const ElementSet& elems = S.elements();
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    gens.push_back(g);
    gens.push_back(g.inverse());
  }
  std::vector<Permutation> current;
  for (std::size_t i = 0; i < elems.size(); ++i) current.push_back(elems.element(i));
  bool changed = true;
  while (changed) {
    changed = false;
    ElementSet cur = ElementSet::from_permutations(G.degree(), current);
    std::vector<Permutation> next;
    for (const auto& x : current) {
      bool keep = true;
      for (const auto& g : gens)
        if (!cur.contains(conjugate(x, g))) {
          keep = false;
          break;
        }
      if (keep) next.push_back(x);
    }
    changed = next.size() != current.size();
    current = std::move(next);
  }
  return Subgroup::from_elements(ElementSet::from_permutations(G.degree(), current), {});
}

/// O_p(G): the largest normal p-subgroup, as the core of a Sylow subgroup.
/// `within` optionally supplies a p-subgroup known to be normal in G (it
/// seeds the Sylow search).
inline Subgroup p_core(const PermGroup& G, std::uint64_t p, const Limits& limits = {},
                       std::optional<Subgroup> within = std::nullopt) {
  if (p_part(G.order(), p) == 1) return Subgroup::trivial(G.degree());
  return normal_core(G, sylow(G, p, limits, std::move(within)));
}

/// True when R = O_p(N_G(R)).
inline bool is_p_radical(const PermGroup& G, const Subgroup& R, std::uint64_t p, const Limits& limits = {}) {
  return p_core(normalizer_group(G, R, limits), p, limits, R).order() == R.order();
}

/// Sorted by key: order first, then element table.
inline void sort_subgroups(std::vector<Subgroup>& subs) {
  std::vector<std::pair<SubgroupKey, std::size_t>> keyed;
  keyed.reserve(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) keyed.emplace_back(subs[i].key(), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (auto& [k, i] : keyed) out.push_back(std::move(subs[i]));
  subs = std::move(out);
}

/// Every non-trivial subgroup of the p-group S, each once, sorted by key.
/// Layered closure: cyclic subgroups first, then <H, x> for every found H and
/// every x in S \ H until nothing new appears.
inline std::vector<Subgroup> all_subgroups_of_p_group(const Subgroup& S, const Limits& limits = {}) {
  if (S.order() > limits.p_group_order)
    throw CapExceeded("subgroups", "p-group order", "--cap-p-group", limits.p_group_order);
  const ElementSet& elems = S.elements();
  const std::size_t n = S.degree();
  std::vector<Permutation> all;
  for (std::size_t i = 0; i < elems.size(); ++i) all.push_back(elems.element(i));

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup h) {
    if (h.is_trivial()) return;
    if (index.count(h.elements())) return;
    if (found.size() >= limits.subgroup_count)
      throw CapExceeded("subgroups", "subgroup count", "--cap-subgroups", limits.subgroup_count);
    index.emplace(h.elements(), found.size());
    found.push_back(std::move(h));
  };
  for (const auto& x : all)
    if (!x.is_identity()) add(Subgroup::generated(n, {x}, limits));
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found[i].order() == S.order()) continue;
    std::unordered_set<Permutation, PermutationHash> covered;
    for (const auto& x : all) {
      if (found[i].contains(x) || covered.count(x)) continue;
      std::vector<Permutation> gens = found[i].generators();
      gens.push_back(x);
      std::vector<Permutation> seed;
      const ElementSet& he = found[i].elements();
      for (std::size_t r = 0; r < he.size(); ++r) seed.push_back(he.element(r));
      auto closed = close_under(n, std::move(seed), gens, limits.subgroup_elements);
      Subgroup k = Subgroup::from_elements(ElementSet::from_permutations(n, *closed), std::move(gens));
      // <H, xh> = <H, x> for h in H
      for (std::size_t r = 0; r < he.size(); ++r) covered.insert(x * he.element(r));
      add(std::move(k));
    }
  }
  sort_subgroups(found);
  return found;
}

/// Non-trivial elementary abelian p-subgroups of G, sorted by key. Rank-1
/// subgroups come from the elements of order p; each layer is extended by
/// order-p elements commuting with the current generators.
inline std::vector<Subgroup> elementary_abelian_subgroups(const PermGroup& G, std::uint64_t p,
                                                          const Limits& limits = {}) {
  if (!is_prime(p)) throw InvalidInput("subgroups", std::to_string(p) + " is not prime");
  const std::size_t n = G.degree();
  if (G.order() > limits.elements) throw CapExceeded("subgroups", "elements", "--cap-elements", limits.elements);
  std::vector<Permutation> order_p;
  for_each_element(G, [&](const Permutation& g) {
    if (g.order() == p) order_p.push_back(g);
    return true;
  });
  std::sort(order_p.begin(), order_p.end());
  std::unordered_map<Permutation, std::size_t, PermutationHash> pos;
  for (std::size_t i = 0; i < order_p.size(); ++i) pos.emplace(order_p[i], i);
  std::vector<std::optional<std::vector<std::uint32_t>>> commuting(order_p.size());
  auto commuting_with = [&](std::size_t i) -> const std::vector<std::uint32_t>& {
    if (!commuting[i]) {
      std::vector<std::uint32_t> c;
      for (std::size_t j = 0; j < order_p.size(); ++j)
        if (j != i && commute(order_p[i], order_p[j])) c.push_back(static_cast<std::uint32_t>(j));
      commuting[i] = std::move(c);
    }
    return *commuting[i];
  };

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> layer;
  std::vector<Subgroup> result;
  auto push = [&](std::vector<Subgroup>& into, Subgroup h) {
    if (!seen.insert(h.elements()).second) return;
    if (seen.size() > limits.subgroup_count)
      throw CapExceeded("subgroups", "subgroup count", "--cap-subgroups", limits.subgroup_count);
    into.push_back(std::move(h));
  };
  for (const auto& x : order_p) push(layer, Subgroup::generated(n, {x}, limits));
  while (!layer.empty()) {
    std::vector<Subgroup> next;
    for (const auto& A : layer) {
      // candidates commute with the first generator; filter by the rest
      std::size_t a0 = pos.at(A.generators().front());
      for (std::uint32_t j : commuting_with(a0)) {
        const Permutation& x = order_p[j];
        if (A.contains(x)) continue;
        bool ok = true;
        for (std::size_t t = 1; t < A.generators().size() && ok; ++t) ok = commute(A.generators()[t], x);
        if (!ok) continue;
        std::vector<Permutation> gens = A.generators();
        gens.push_back(x);
        // <A, x> = union of A x^i
        std::vector<Permutation> elems;
        const ElementSet& ae = A.elements();
        Permutation xi(n);
        for (std::uint64_t i = 0; i < p; ++i) {
          for (std::size_t r = 0; r < ae.size(); ++r) elems.push_back(ae.element(r) * xi);
          xi = xi * x;
        }
        push(next, Subgroup::from_elements(ElementSet::from_permutations(n, elems), std::move(gens)));
      }
    }
    for (auto& a : layer) result.push_back(std::move(a));
    layer = std::move(next);
  }
  sort_subgroups(result);
  return result;
}

/// The full conjugation orbit of `rep`, in orbit (breadth-first) order.
inline std::vector<Subgroup> expand_conjugates(const PermGroup& G, const Subgroup& rep, const Limits& limits = {}) {
  SubgroupOrbit orb = conjugation_orbit(G, rep, limits);
  std::vector<Subgroup> out;
  out.reserve(orb.size());
  for (std::size_t i = 0; i < orb.size(); ++i) {
    Permutation t = orb.transversal(i);
    std::vector<Permutation> gens;
    for (const auto& g : rep.generators()) gens.push_back(conjugate(g, t));
    out.push_back(Subgroup::from_elements(orb[i], std::move(gens)));
  }
  return out;
}

struct ConjugacyClass {
  Subgroup representative;
  std::vector<Subgroup> members;  // the full orbit, representative first
};

/// Splits `subs` into G-conjugacy classes; the first member of `subs` met in a
/// class becomes its representative, and classes are listed in that order.
inline std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& G, const std::vector<Subgroup>& subs,
                                                     const Limits& limits = {}) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ConjugacyClass> classes;
  for (const auto& h : subs) {
    if (seen.count(h.elements())) continue;
    ConjugacyClass c{h, expand_conjugates(G, h, limits)};
    for (const auto& m : c.members) seen.insert(m.elements());
    classes.push_back(std::move(c));
  }
  return classes;
}

inline std::vector<Subgroup> dedupe_by_conjugacy(const PermGroup& G, const std::vector<Subgroup>& subs,
                                                 const Limits& limits = {}) {
  std::vector<Subgroup> reps;
  for (auto& c : conjugacy_classes(G, subs, limits)) reps.push_back(std::move(c.representative));
  return reps;
}

}  // namespace psc
