#pragma once

// Stabilizer chains (deterministic Schreier-Sims), permutation groups,
// element enumeration and a generic orbit engine.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "psc/errors.hpp"
#include "psc/permutation.hpp"

namespace psc {

using BigInt = boost::multiprecision::cpp_int;

inline std::uint64_t to_u64(const BigInt& x, const char* what = "value") {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max())
    throw InvalidInput("permcore", std::string(what) + " does not fit in 64 bits");
  return x.convert_to<std::uint64_t>();
}

struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> slot;  // point -> index into orbit/reps, -1 when outside the orbit
  std::vector<Permutation> reps;   // reps[k](base) == orbit[k]
  std::vector<Permutation> rep_inverses;
};

/// Base and strong generating set. The base point of each level is the
/// smallest point moved by the first generator that reached that level, so
/// the chain depends only on the order in which generators are added.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree = 0) : degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<ChainLevel>& levels() const noexcept { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

  /// Sifts g from level `from` downwards. Returns the residue and the index of
  /// the level where sifting stopped (levels().size() when it passed them all).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const auto& l = levels_[i];
      std::int32_t s = l.slot[g(l.base)];
      if (s < 0) return {std::move(g), i};
      if (s != 0) g = l.rep_inverses[s] * g;
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [residue, level] = sift(g);
    return level == levels_.size() && residue.is_identity();
  }

  /// Adds g to the group. Returns false when g was already a member.
  bool add_generator(const Permutation& g) {
    if (g.degree() != degree_)
      throw InvalidInput("permcore", "generator degree " + std::to_string(g.degree()) + " differs from group degree " +
                                         std::to_string(degree_));
    auto [residue, level] = sift(g);
    if (level == levels_.size() && residue.is_identity()) return false;
    extend(0, g);
    return true;
  }

 private:
  void extend(std::size_t i, Permutation g) {
    if (i == levels_.size()) {
      ChainLevel l;
      l.base = static_cast<Point>(g.first_moved_point());
      l.orbit = {l.base};
      l.slot.assign(degree_, -1);
      l.slot[l.base] = 0;
      l.reps = {Permutation(degree_)};
      l.rep_inverses = {Permutation(degree_)};
      levels_.push_back(std::move(l));
    }
    const std::size_t old_gens = levels_[i].generators.size();
    const std::size_t old_orbit = levels_[i].orbit.size();
    levels_[i].generators.push_back(std::move(g));
    grow_orbit(levels_[i], old_gens, old_orbit);

    // Only pairs involving a new orbit point or the new generator are untested.
    // levels_ may reallocate inside the recursion, so index afresh each time.
    for (std::size_t j = 0; j < levels_[i].orbit.size(); ++j) {
      for (std::size_t k = (j < old_orbit ? old_gens : 0); k < levels_[i].generators.size(); ++k) {
        const ChainLevel& l = levels_[i];
        const Permutation& s = l.generators[k];
        Point image = s(l.orbit[j]);
        Permutation h = l.rep_inverses[l.slot[image]] * (s * l.reps[j]);
        if (h.is_identity()) continue;
        auto [residue, level] = sift(std::move(h), i + 1);
        if (level == levels_.size() && residue.is_identity()) continue;
        extend(i + 1, std::move(residue));
      }
    }
  }

  void grow_orbit(ChainLevel& l, std::size_t old_gens, std::size_t old_orbit) {
    for (std::size_t j = 0; j < l.orbit.size(); ++j) {
      for (std::size_t k = (j < old_orbit ? old_gens : 0); k < l.generators.size(); ++k) {
        Point c = l.generators[k](l.orbit[j]);
        if (l.slot[c] >= 0) continue;
        l.slot[c] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(c);
        Permutation r = l.generators[k] * l.reps[j];
        l.rep_inverses.push_back(r.inverse());
        l.reps.push_back(std::move(r));
      }
    }
  }

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

/// A permutation group given by generators. Immutable after construction;
/// copies share the chain.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}

  PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
    auto chain = std::make_shared<StabilizerChain>(degree);
    for (const auto& g : generators) {
      if (g.degree() != degree)
        throw InvalidInput("permcore", "generator degree " + std::to_string(g.degree()) + " differs from " +
                                           std::to_string(degree));
      chain->add_generator(g);
    }
    generators_ = std::move(generators);
    order_ = chain->order();
    chain_ = std::move(chain);
  }

  /// Adopts an already built chain (used when growing normalizers).
  PermGroup(std::vector<Permutation> generators, std::shared_ptr<const StabilizerChain> chain)
      : degree_(chain->degree()), generators_(std::move(generators)), chain_(std::move(chain)) {
    order_ = chain_->order();
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabilizerChain& chain() const noexcept { return *chain_; }
  const BigInt& order() const noexcept { return order_; }
  bool contains(const Permutation& g) const { return chain_->contains(g); }
  Permutation identity() const { return Permutation(degree_); }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
  BigInt order_ = 1;
};

inline StabilizerChain build_chain(std::size_t degree, std::span<const Permutation> generators) {
  StabilizerChain c(degree);
  for (const auto& g : generators) c.add_generator(g);
  return c;
}

/// Calls f(g) for every element of G exactly once, in a fixed order (mixed
/// radix over the chain transversals, deepest level fastest). Stops early when
/// f returns false.
template <class F>
void for_each_element(const PermGroup& G, F&& f) {
  const auto& levels = G.chain().levels();
  const std::size_t m = levels.size();
  std::vector<Permutation> prefix(m + 1, G.identity());
  std::vector<std::size_t> idx(m, 0);
  if (m == 0) {
    f(prefix[0]);
    return;
  }
  std::size_t depth = 0;
  while (true) {
    prefix[depth + 1] = prefix[depth] * levels[depth].reps[idx[depth]];
    if (depth + 1 < m) {
      ++depth;
      idx[depth] = 0;
      continue;
    }
    if (!f(static_cast<const Permutation&>(prefix[m]))) return;
    // advance
    while (true) {
      if (++idx[depth] < levels[depth].reps.size()) break;
      if (depth == 0) return;
      --depth;
    }
  }
}

inline std::vector<Permutation> elements(const PermGroup& G, const Limits& limits = {}) {
  if (G.order() > limits.elements) throw CapExceeded("permcore", "elements", "--cap-elements", limits.elements);
  std::vector<Permutation> out;
  out.reserve(to_u64(G.order()));
  for_each_element(G, [&](const Permutation& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

/// How a permutation acts on orbit items. Left: item -> g.item with
/// (g*h).x = g.(h.x), e.g. points. Right: item -> item^g with
/// x^(g*h) = (x^g)^h, e.g. conjugation H -> g^-1 H g.
enum class Side { left, right };

/// Breadth-first orbit of `seed` under `gens`, keeping a Schreier tree so that
/// transversal elements and Schreier generators of the stabilizer can be
/// recovered.
template <class Item, class Hash = std::hash<Item>, class Eq = std::equal_to<Item>>
class Orbit {
 public:
  template <class Act>
  Orbit(Item seed, std::span<const Permutation> gens, Act&& act, Side side, std::uint64_t cap,
        const char* module = "permcore")
      : gens_(gens.begin(), gens.end()), side_(side) {
    degree_ = gens_.empty() ? 0 : gens_.front().degree();
    index_.emplace(seed, 0);
    items_.push_back(std::move(seed));
    parent_.push_back({-1, -1});
    for (std::size_t i = 0; i < items_.size(); ++i) {
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        Item next = act(items_[i], gens_[k]);
        auto it = index_.find(next);
        std::int32_t target;
        if (it == index_.end()) {
          if (items_.size() >= cap) throw CapExceeded(module, "orbit", "--cap-orbit", cap);
          target = static_cast<std::int32_t>(items_.size());
          index_.emplace(next, target);
          items_.push_back(std::move(next));
          parent_.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(k)});
        } else {
          target = it->second;
        }
        targets_.push_back(target);
      }
    }
  }

  /// Degree of transversal elements when there are no generators.
  Orbit& with_degree(std::size_t n) {
    if (gens_.empty()) degree_ = n;
    return *this;
  }

  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<Item>& items() const noexcept { return items_; }
  const Item& operator[](std::size_t i) const { return items_[i]; }

  std::optional<std::size_t> index_of(const Item& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return static_cast<std::size_t>(it->second);
  }

  /// Element t with seed.t == items()[i] (in the orbit's action side).
  Permutation transversal(std::size_t i) const {
    Permutation t(degree_);
    std::vector<std::int32_t> path;
    for (std::int32_t j = static_cast<std::int32_t>(i); parent_[j].first >= 0; j = parent_[j].first)
      path.push_back(parent_[j].second);
    // path holds generator indices from item i back to the seed.
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const auto& s = gens_[*it];
      t = side_ == Side::right ? t * s : s * t;
    }
    return t;
  }

  /// Calls f(h) for each non-trivial Schreier generator of the stabilizer of
  /// the seed, in a fixed order. Stops when f returns false.
  template <class F>
  void for_each_schreier_generator(F&& f) const {
    std::unordered_map<std::size_t, Permutation> cache;
    auto tr = [&](std::size_t i) -> const Permutation& {
      auto it = cache.find(i);
      if (it == cache.end()) it = cache.emplace(i, transversal(i)).first;
      return it->second;
    };
    for (std::size_t i = 0; i < items_.size(); ++i) {
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        std::size_t j = static_cast<std::size_t>(targets_[i * gens_.size() + k]);
        if (parent_[j].first == static_cast<std::int32_t>(i) && parent_[j].second == static_cast<std::int32_t>(k))
          continue;  // tree edge
        Permutation h = side_ == Side::right ? tr(i) * gens_[k] * tr(j).inverse() : tr(j).inverse() * gens_[k] * tr(i);
        if (h.is_identity()) continue;
        if (!f(static_cast<const Permutation&>(h))) return;
      }
    }
  }

 private:
  std::vector<Permutation> gens_;
  Side side_;
  std::size_t degree_ = 0;
  std::vector<Item> items_;
  std::vector<std::pair<std::int32_t, std::int32_t>> parent_;
  std::vector<std::int32_t> targets_;
  std::unordered_map<Item, std::int32_t, Hash, Eq> index_;
};

/// Orbit of a point under G (left action x -> g(x)).
inline Orbit<Point> point_orbit(const PermGroup& G, Point seed, const Limits& limits = {}) {
  Orbit<Point> o(
      seed, G.generators(), [](Point x, const Permutation& g) { return g(x); }, Side::left, limits.orbit);
  o.with_degree(G.degree());
  return o;
}

}  // namespace psc
