#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace psc {

/// Base error. `module()` names the layer that raised it (permcore, subgroups,
/// posets, complex, topology, cli) so the CLI can report provenance.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error("[" + module + "] " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Malformed input: bad permutation, bad group spec, prime not dividing |G|, ...
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configurable enumeration limit was hit. Carries the name of the config key
/// that raises it.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string module, std::string cap, std::string config_key, std::uint64_t limit)
      : Error(module, cap + " cap of " + std::to_string(limit) + " exceeded (raise with " + config_key + ")"),
        cap_(std::move(cap)),
        config_key_(std::move(config_key)),
        limit_(limit) {}

  const std::string& cap() const noexcept { return cap_; }
  const std::string& config_key() const noexcept { return config_key_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string cap_;
  std::string config_key_;
  std::uint64_t limit_;
};

/// Enumeration caps. All are configuration; these are the defaults.
struct Limits {
  std::uint64_t elements = 10'000'000;         // elements(G) enumeration
  std::uint64_t subgroup_elements = 100'000;   // materialized subgroup size
  std::uint64_t orbit = 5'000'000;             // orbit length
  std::uint64_t p_group_order = 1024;          // all_subgroups_of_p_group input
  std::uint64_t subgroup_count = 2'000'000;    // total subgroups produced by an enumeration
  std::uint64_t chains = 20'000'000;           // maximal chains of an order complex
  std::uint64_t matrix_entries = 200'000'000;  // sparse boundary / relation matrix entries
  std::uint64_t dense_matrix = 4'000'000;      // dense Smith normal form residue (rows * cols)
  std::size_t relator_length = 10'000;         // Tietze elimination relator length bound
  unsigned threads = 1;
};

}  // namespace psc
