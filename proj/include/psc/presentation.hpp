#pragma once

// Finitely presented groups: words, Tietze simplification, free-factor
// splitting, abelianization and certification.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "psc/errors.hpp"
#include "psc/smith.hpp"

namespace psc {

/// Signed 1-based generator indices; -g is the inverse of generator g.
using Word = std::vector<std::int32_t>;

struct GroupPresentation {
  std::size_t generator_count = 0;
  std::vector<Word> relators;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

inline Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

/// Cancels adjacent x x^-1 pairs.
inline void free_reduce(Word& w) {
  std::size_t n = 0;
  for (auto x : w) {
    if (n > 0 && w[n - 1] == -x)
      --n;
    else
      w[n++] = x;
  }
  w.resize(n);
}

/// Free reduction followed by cancelling inverse letters at the two ends.
inline void cyclic_reduce(Word& w) {
  free_reduce(w);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  if (lo > 0) w = Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

namespace detail {

/// Start of the lexicographically least rotation (Booth).
inline std::size_t least_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const auto sj = w[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

inline Word rotated(const Word& w, std::size_t k) {
  Word out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : w) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

/// Representative of w up to rotation and inversion (w cyclically reduced).
inline Word canonical_relator(const Word& w) {
  Word a = detail::rotated(w, detail::least_rotation(w));
  Word wi = inverse(w);
  Word b = detail::rotated(wi, detail::least_rotation(wi));
  return std::min(a, b);
}

/// Cyclically reduces every relator, drops empty ones and duplicates up to
/// rotation and inversion; keeps first occurrences in order.
inline GroupPresentation normalize(const GroupPresentation& P) {
  GroupPresentation out{P.generator_count, {}};
  std::unordered_map<Word, int, detail::WordHash> seen;
  for (Word w : P.relators) {
    for (auto x : w)
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > P.generator_count)
        throw InvalidInput("topology", "relator letter out of range");
    cyclic_reduce(w);
    if (w.empty()) continue;
    if (seen.emplace(canonical_relator(w), 0).second) out.relators.push_back(std::move(w));
  }
  return out;
}

/// Repeated elimination of a generator occurring exactly once in a relator of
/// length at most `max_len`: the relator is solved for the generator, which is
/// substituted everywhere. Among eligible (relator, generator) pairs the
/// shortest relator wins, then the lowest generator, then the earliest
/// relator. Surviving generators keep their relative order.
inline GroupPresentation tietze_simplify(const GroupPresentation& input, std::size_t max_len = 10000) {
  GroupPresentation P = normalize(input);
  const std::size_t ngen = P.generator_count;
  std::vector<Word>& rel = P.relators;
  std::vector<char> alive(rel.size(), 1);
  std::vector<std::uint32_t> version(rel.size(), 0);
  std::vector<char> gen_alive(ngen + 1, 1);
  std::vector<std::vector<std::uint32_t>> occ(ngen + 1);
  std::unordered_map<Word, std::uint32_t, detail::WordHash> canon;

  // (length, generator, relator, relator version)
  using Cand = std::tuple<std::size_t, std::uint32_t, std::uint32_t, std::uint32_t>;
  std::priority_queue<Cand, std::vector<Cand>, std::greater<>> heap;
  std::vector<std::uint32_t> count(ngen + 1, 0);

  auto push_candidates = [&](std::uint32_t r) {
    const Word& w = rel[r];
    if (w.size() > max_len) return;
    for (auto x : w) ++count[static_cast<std::size_t>(std::abs(x))];
    for (auto x : w) {
      auto g = static_cast<std::uint32_t>(std::abs(x));
      if (count[g] == 1) heap.emplace(w.size(), g, r, version[r]);
    }
    for (auto x : w) count[static_cast<std::size_t>(std::abs(x))] = 0;
  };
  auto index_relator = [&](std::uint32_t r) {
    for (auto x : rel[r]) occ[static_cast<std::size_t>(std::abs(x))].push_back(r);
  };

  for (std::uint32_t r = 0; r < rel.size(); ++r) {
    canon.emplace(canonical_relator(rel[r]), r);
    index_relator(r);
    push_candidates(r);
  }

  auto drop = [&](std::uint32_t r) {
    auto it = canon.find(canonical_relator(rel[r]));
    if (it != canon.end() && it->second == r) canon.erase(it);
    alive[r] = 0;
    ++version[r];
    rel[r].clear();
    rel[r].shrink_to_fit();
  };

  Word replacement, inv_replacement, buffer;
  while (!heap.empty()) {
    auto [len, g, r, ver] = heap.top();
    heap.pop();
    if (!alive[r] || version[r] != ver || !gen_alive[g]) continue;
    const Word& w = rel[r];
    std::size_t pos = w.size();
    for (std::size_t i = 0; i < w.size(); ++i)
      if (static_cast<std::uint32_t>(std::abs(w[i])) == g) pos = i;
    // w rotated to g^e u: g^e = u^-1, so g = u^-1 (e = 1) or g = u (e = -1)
    const bool positive = w[pos] > 0;
    Word u(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
    u.insert(u.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    replacement = positive ? inverse(u) : u;
    inv_replacement = inverse(replacement);
    drop(r);
    gen_alive[g] = 0;

    std::vector<std::uint32_t> targets = std::move(occ[g]);
    occ[g].clear();
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::uint32_t k : targets) {
      if (!alive[k]) continue;
      Word& wk = rel[k];
      if (std::none_of(wk.begin(), wk.end(), [g](std::int32_t x) { return static_cast<std::uint32_t>(std::abs(x)) == g; }))
        continue;
      {
        auto it = canon.find(canonical_relator(wk));
        if (it != canon.end() && it->second == k) canon.erase(it);
      }
      buffer.clear();
      for (auto x : wk) {
        if (static_cast<std::uint32_t>(std::abs(x)) != g)
          buffer.push_back(x);
        else
          buffer.insert(buffer.end(), (x > 0 ? replacement : inv_replacement).begin(),
                        (x > 0 ? replacement : inv_replacement).end());
      }
      cyclic_reduce(buffer);
      wk = buffer;
      ++version[k];
      if (wk.empty() || !canon.emplace(canonical_relator(wk), k).second) {
        alive[k] = 0;
        wk.clear();
        continue;
      }
      for (auto x : replacement) occ[static_cast<std::size_t>(std::abs(x))].push_back(k);
      push_candidates(k);
    }
  }

  std::vector<std::int32_t> new_index(ngen + 1, 0);
  std::int32_t next = 0;
  for (std::size_t g = 1; g <= ngen; ++g)
    if (gen_alive[g]) new_index[g] = ++next;
  GroupPresentation out{static_cast<std::size_t>(next), {}};
  for (std::uint32_t r = 0; r < rel.size(); ++r) {
    if (!alive[r]) continue;
    Word w = std::move(rel[r]);
    for (auto& x : w) x = x > 0 ? new_index[static_cast<std::size_t>(x)] : -new_index[static_cast<std::size_t>(-x)];
    out.relators.push_back(std::move(w));
  }
  return out;
}

/// Generators absent from every relator split off as a free factor; the
/// residual keeps the others, re-indexed in order.
inline std::pair<std::size_t, GroupPresentation> split_free_factor(const GroupPresentation& P) {
  std::vector<char> used(P.generator_count + 1, 0);
  for (const auto& w : P.relators)
    for (auto x : w) used[static_cast<std::size_t>(std::abs(x))] = 1;
  std::vector<std::int32_t> new_index(P.generator_count + 1, 0);
  std::int32_t next = 0;
  for (std::size_t g = 1; g <= P.generator_count; ++g)
    if (used[g]) new_index[g] = ++next;
  GroupPresentation residual{static_cast<std::size_t>(next), P.relators};
  for (auto& w : residual.relators)
    for (auto& x : w) x = x > 0 ? new_index[static_cast<std::size_t>(x)] : -new_index[static_cast<std::size_t>(-x)];
  return {P.generator_count - static_cast<std::size_t>(next), std::move(residual)};
}

struct Abelianization {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

inline std::string to_string(const Abelianization& a) {
  std::string s = "Z^" + std::to_string(a.rank);
  for (const auto& t : a.torsion) s += " + Z/" + t.str();
  return s;
}

inline Abelianization abelianization(const GroupPresentation& P, const Limits& limits = {}) {
  SparseIntMatrix m(P.relators.size(), P.generator_count);
  for (std::size_t r = 0; r < P.relators.size(); ++r)
    for (auto x : P.relators[r]) m.add(r, static_cast<std::uint32_t>(std::abs(x) - 1), x > 0 ? 1 : -1);
  m.normalize();
  auto snf = smith_normal_form(m, limits);
  return {P.generator_count - snf.rank, std::move(snf.torsion)};
}

enum class Pi1Status { trivial, free, presented };

inline std::string to_string(Pi1Status s) {
  switch (s) {
    case Pi1Status::trivial: return "trivial";
    case Pi1Status::free: return "free";
    case Pi1Status::presented: return "presented";
  }
  return "?";
}

struct Certificate {
  Pi1Status status = Pi1Status::trivial;
  std::size_t free_rank = 0;  // meaningful for free
};

/// Read off a simplified presentation; free(0) is reported as trivial.
inline Certificate certify(const GroupPresentation& P) {
  if (P.generator_count == 0) return {Pi1Status::trivial, 0};
  if (P.relators.empty()) return {Pi1Status::free, P.generator_count};
  return {Pi1Status::presented, 0};
}

inline std::string to_string(const Certificate& c) {
  return c.status == Pi1Status::free ? "free(" + std::to_string(c.free_rank) + ")" : to_string(c.status);
}

}  // namespace psc
