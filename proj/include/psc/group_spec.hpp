#pragma once

// Group-spec DSL:
//
//   spec := symmetric:N | alternating:N | cyclic:N | dihedral:M
//         | product(spec,spec) | wreath2(spec) | file:PATH | data:NAME
//
// Whitespace around tokens is ignored. A file path runs to the end of the
// input, or inside product(...)/wreath2(...) to the next ',' or ')'.

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "psc/errors.hpp"
#include "psc/perm_group.hpp"
#include "psc/permutation.hpp"

#ifndef PSC_DEFAULT_DATA_DIR
#define PSC_DEFAULT_DATA_DIR "data"
#endif

namespace psc {

struct GroupSpec {
  enum class Kind { symmetric, alternating, cyclic, dihedral, product, wreath2, file, data };
  Kind kind = Kind::symmetric;
  std::uint64_t n = 0;   // numeric argument
  std::string name;      // file path or data name
  std::vector<GroupSpec> args;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

inline const std::vector<std::string>& data_group_names() {
  static const std::vector<std::string> names{"m11", "m12", "m22", "m23", "j1"};
  return names;
}

inline std::string render(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  switch (s.kind) {
    case K::symmetric: return "symmetric:" + std::to_string(s.n);
    case K::alternating: return "alternating:" + std::to_string(s.n);
    case K::cyclic: return "cyclic:" + std::to_string(s.n);
    case K::dihedral: return "dihedral:" + std::to_string(s.n);
    case K::product: return "product(" + render(s.args[0]) + "," + render(s.args[1]) + ")";
    case K::wreath2: return "wreath2(" + render(s.args[0]) + ")";
    case K::file: return "file:" + s.name;
    case K::data: return "data:" + s.name;
  }
  return "";
}

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec g = spec(0);
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("cli", "group spec syntax error at position " + std::to_string(pos_ + 1) + ": " + what +
                                  " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (b == pos_) fail("expected a group name");
    return std::string(s_.substr(b, pos_ - b));
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t b = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 65535) fail("number too large");
      ++pos_;
    }
    if (b == pos_) fail("expected a number");
    return v;
  }

  GroupSpec spec(int depth) {
    using K = GroupSpec::Kind;
    const std::size_t start = (skip_ws(), pos_);
    const std::string w = word();
    GroupSpec g;
    if (w == "product" || w == "wreath2") {
      g.kind = w == "product" ? K::product : K::wreath2;
      expect('(');
      g.args.push_back(spec(depth + 1));
      if (g.kind == K::product) {
        expect(',');
        g.args.push_back(spec(depth + 1));
      }
      expect(')');
      return g;
    }
    if (w == "symmetric") g.kind = K::symmetric;
    else if (w == "alternating") g.kind = K::alternating;
    else if (w == "cyclic") g.kind = K::cyclic;
    else if (w == "dihedral") g.kind = K::dihedral;
    else if (w == "file") g.kind = K::file;
    else if (w == "data") g.kind = K::data;
    else {
      pos_ = start;
      fail("unknown group '" + w + "'");
    }
    expect(':');
    if (g.kind == K::file) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && !(depth > 0 && (s_[pos_] == ',' || s_[pos_] == ')'))) ++pos_;
      g.name = std::string(s_.substr(b, pos_ - b));
      while (!g.name.empty() && std::isspace(static_cast<unsigned char>(g.name.back()))) g.name.pop_back();
      if (g.name.empty()) fail("expected a file path");
      return g;
    }
    if (g.kind == K::data) {
      const std::size_t at = (skip_ws(), pos_);
      g.name = word();
      bool known = false;
      for (const auto& n : data_group_names()) known = known || n == g.name;
      if (!known) {
        pos_ = at;
        fail("unknown data group '" + g.name + "' (known: m11, m12, m22, m23, j1)");
      }
      return g;
    }
    const std::size_t at = (skip_ws(), pos_);
    g.n = number();
    if (g.n == 0) {
      pos_ = at;
      fail("degree must be positive");
    }
    if (g.kind == K::dihedral && g.n % 2 != 0) {
      pos_ = at;
      fail("dihedral order must be even");
    }
    return g;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::vector<int> iota_cycle(int from, int to) {
  std::vector<int> c;
  for (int i = from; i <= to; ++i) c.push_back(i);
  return c;
}

inline Permutation shifted(const Permutation& g, std::size_t offset, std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < g.degree(); ++i) img[i + offset] = static_cast<Point>(g(static_cast<Point>(i)) + offset);
  return Permutation(std::move(img));
}

}  // namespace detail

inline GroupSpec parse_group_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

/// Generator file: first non-comment line is the degree, every further
/// non-empty line a permutation as 1-based images; '#' starts a comment line.
inline PermGroup read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("permcore", "cannot open generator file '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  long long degree = -1;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> v;
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      long long x = std::strtoll(tok.c_str(), &end, 10);
      if (*end != '\0')
        throw InvalidInput("permcore", path + ":" + std::to_string(lineno) + ": not an integer '" + tok + "'");
      v.push_back(x);
    }
    if (degree < 0) {
      if (v.size() != 1 || v[0] < 1 || v[0] > 65535)
        throw InvalidInput("permcore", path + ":" + std::to_string(lineno) + ": expected the degree");
      degree = v[0];
      continue;
    }
    if (static_cast<long long>(v.size()) != degree)
      throw InvalidInput("permcore", path + ":" + std::to_string(lineno) + ": expected " + std::to_string(degree) +
                                         " images, got " + std::to_string(v.size()));
    try {
      gens.push_back(Permutation::from_one_based(v));
    } catch (const Error& e) {
      throw InvalidInput("permcore", path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (degree < 0) throw InvalidInput("permcore", "generator file '" + path + "' is empty");
  return PermGroup(static_cast<std::size_t>(degree), std::move(gens));
}

/// PSC_DATA_DIR if set, else the data directory of the source tree.
inline std::filesystem::path data_directory() {
  if (const char* env = std::getenv("PSC_DATA_DIR"); env && *env) return env;
  return PSC_DEFAULT_DATA_DIR;
}

inline PermGroup resolve(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  const int n = static_cast<int>(s.n);
  switch (s.kind) {
    case K::symmetric:
      if (n < 2) return PermGroup(s.n, {});
      return PermGroup(s.n, {Permutation::from_cycles(s.n, {{1, 2}}),
                             Permutation::from_cycles(s.n, {detail::iota_cycle(1, n)})});
    case K::alternating:
      if (n < 3) return PermGroup(s.n, {});
      return PermGroup(s.n, {Permutation::from_cycles(s.n, {{1, 2, 3}}),
                             Permutation::from_cycles(s.n, {detail::iota_cycle(n % 2 ? 1 : 2, n)})});
    case K::cyclic:
      if (n < 2) return PermGroup(s.n, {});
      return PermGroup(s.n, {Permutation::from_cycles(s.n, {detail::iota_cycle(1, n)})});
    case K::dihedral: {
      const int k = n / 2;
      if (k == 1) return PermGroup(2, {Permutation::from_cycles(2, {{1, 2}})});
      if (k == 2)
        return PermGroup(4, {Permutation::from_cycles(4, {{1, 2}, {3, 4}}), Permutation::from_cycles(4, {{1, 3}, {2, 4}})});
      // rotation and the reflection i -> 2 - i (mod k) fixing 1
      std::vector<std::vector<int>> refl;
      for (int i = 2, j = k; i < j; ++i, --j) refl.push_back({i, j});
      return PermGroup(static_cast<std::size_t>(k), {Permutation::from_cycles(static_cast<std::size_t>(k), {detail::iota_cycle(1, k)}),
                                                     Permutation::from_cycles(static_cast<std::size_t>(k), refl)});
    }
    case K::product: {
      PermGroup a = resolve(s.args[0]), b = resolve(s.args[1]);
      const std::size_t d = a.degree() + b.degree();
      if (d > 65535) throw InvalidInput("cli", "product degree exceeds 65535");
      std::vector<Permutation> gens;
      for (const auto& g : a.generators()) gens.push_back(detail::shifted(g, 0, d));
      for (const auto& g : b.generators()) gens.push_back(detail::shifted(g, a.degree(), d));
      return PermGroup(d, std::move(gens));
    }
    case K::wreath2: {
      PermGroup a = resolve(s.args[0]);
      const std::size_t m = a.degree(), d = 2 * m;
      if (d > 65535) throw InvalidInput("cli", "wreath product degree exceeds 65535");
      std::vector<Permutation> gens;
      for (const auto& g : a.generators()) gens.push_back(detail::shifted(g, 0, d));
      std::vector<Point> swap(d);
      for (std::size_t i = 0; i < m; ++i) {
        swap[i] = static_cast<Point>(i + m);
        swap[i + m] = static_cast<Point>(i);
      }
      gens.emplace_back(std::move(swap));
      return PermGroup(d, std::move(gens));
    }
    case K::file: return read_generator_file(s.name);
    case K::data: return read_generator_file((data_directory() / (s.name + ".gens")).string());
  }
  throw InvalidInput("cli", "unresolvable group spec");
}

inline PermGroup resolve(std::string_view text) { return resolve(parse_group_spec(text)); }

}  // namespace psc
