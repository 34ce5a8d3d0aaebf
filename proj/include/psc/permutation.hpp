#pragma once

// Permutations of {0..n-1} (printed and parsed 1-based).
//
// Composition convention, used everywhere in this library:
//     (a * b)(x) = a(b(x))
// i.e. `b` is applied first. Conjugation is h^g = g^-1 * h * g, which makes
// subgroup conjugation a right action: (H^g)^k = H^(g*k).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "psc/errors.hpp"

namespace psc {

using Point = std::uint16_t;

class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : images_(degree) {
    if (degree > 0xFFFF) throw InvalidInput("permcore", "degree " + std::to_string(degree) + " too large");
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// From a 0-based image list. Throws unless it is a bijection.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p])
        throw InvalidInput("permcore", "image list is not a bijection of {1.." + std::to_string(images_.size()) + "}");
      seen[p] = true;
    }
  }

  /// Wraps an image list already known to be a bijection.
  static Permutation unchecked(std::vector<Point> images) noexcept {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// From a 1-based image list, as in the generator file format.
  static Permutation from_one_based(std::span<const long long> images) {
    std::vector<Point> v;
    v.reserve(images.size());
    for (long long x : images) {
      if (x < 1 || x > static_cast<long long>(images.size()))
        throw InvalidInput("permcore", "image " + std::to_string(x) + " outside 1.." + std::to_string(images.size()));
      v.push_back(static_cast<Point>(x - 1));
    }
    return Permutation(std::move(v));
  }

  /// From disjoint 1-based cycles, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int from = c[i];
        int to = c[(i + 1) % c.size()];
        if (from < 1 || from > static_cast<int>(degree) || to < 1 || to > static_cast<int>(degree))
          throw InvalidInput("permcore", "cycle point outside 1.." + std::to_string(degree));
        if (used[from - 1]) throw InvalidInput("permcore", "cycles are not disjoint");
        used[from - 1] = true;
        p.images_[from - 1] = static_cast<Point>(to - 1);
      }
    }
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return i;
    return images_.size();
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  /// Element order: lcm of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(images_.size(), false);
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      l = std::lcm(l, len);
    }
    return l;
  }

  Permutation pow(std::int64_t k) const;

  /// Cycle notation, 1-based; "()" for the identity.
  std::string cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      any = true;
      os << '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) os << ',';
        os << j + 1;
      }
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

/// (a * b)(x) = a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InvalidInput("permcore", "degree mismatch in compose: " + std::to_string(a.degree()) + " vs " +
                                       std::to_string(b.degree()));
  std::vector<Point> v(a.degree());
  auto ai = a.images();
  auto bi = b.images();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ai[bi[i]];
  return Permutation::unchecked(std::move(v));
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// g^-1 * h * g.
inline Permutation conjugate(const Permutation& h, const Permutation& g) {
  auto hi = h.images();
  auto gi = g.images();
  std::vector<Point> v(h.degree());
  std::vector<Point> ginv(g.degree());
  for (std::size_t i = 0; i < gi.size(); ++i) ginv[gi[i]] = static_cast<Point>(i);
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = ginv[hi[gi[x]]];
  return Permutation::unchecked(std::move(v));
}

inline bool commute(const Permutation& a, const Permutation& b) noexcept {
  auto ai = a.images();
  auto bi = b.images();
  for (std::size_t i = 0; i < ai.size(); ++i)
    if (ai[bi[i]] != bi[ai[i]]) return false;
  return true;
}

inline Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

/// FNV-1a over a run of points.
inline std::uint64_t hash_points(std::span<const Point> pts, std::uint64_t h = 1469598103934665603ULL) noexcept {
  for (Point x : pts) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return static_cast<std::size_t>(hash_points(p.images())); }
};

}  // namespace psc
