// psc: p-subgroup complexes from the command line.
//
//   psc --group alternating:6 --prime 2 --poset quillen
//   psc --group data:j1 --prime 2 --poset bouc --json j1.json
//   psc verify [--extended]
//
// Exit codes: 0 ok, 1 check failed, 2 invalid input, 3 cap exceeded,
// 4 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "psc/psc.hpp"

namespace {

enum Exit : int { ok = 0, check_failed = 1, invalid_input = 2, cap_exceeded = 3, internal_error = 4 };

void write_json(const std::string& path, const psc::Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw psc::InvalidInput("cli", "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

int run_main(const psc::RunConfig& cfg, const std::string& json_path, const std::string& poset_path,
             const std::string& complex_path) {
  psc::RunArtifacts art;
  const bool keep = !poset_path.empty() || !complex_path.empty();
  psc::RunReport r = psc::run(cfg, keep ? &art : nullptr);
  if (!poset_path.empty()) write_json(poset_path, psc::poset_to_json(art.poset, r.group_spec));
  if (!complex_path.empty()) write_json(complex_path, psc::complex_to_json(art.complex));
  if (!json_path.empty()) write_json(json_path, psc::report_to_json(r));
  std::cout << psc::report_to_text(r);
  return r.violations && !r.violations->empty() ? check_failed : ok;
}

int verify_main(bool extended, unsigned threads) {
  bool all = true;
  std::size_t n = 0;
  psc::run_acceptance(extended, threads, [&](const psc::AcceptanceRow& row) {
    std::cout << psc::format_row(row) << std::endl;
    all = all && row.pass;
    ++n;
  });
  std::cout << (all ? "all " + std::to_string(n) + " rows passed" : "some rows FAILED") << "\n";
  return all ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-subgroup posets, order complexes, fundamental groups and homology"};
  app.require_subcommand(0, 1);

  psc::RunConfig cfg;
  psc::Limits& lim = cfg.limits;
  std::string poset = "quillen", json_path, poset_path, complex_path;
  std::optional<unsigned> truncation;
  std::optional<std::size_t> homology_dim;

  app.add_option("--group", cfg.group_spec, "group spec, e.g. alternating:6, product(symmetric:3,cyclic:2), data:m11");
  app.add_option("--prime", cfg.prime, "the prime p")->default_val(2);
  app.add_option("--poset", poset, "quillen | sp | bouc")->default_val("quillen");
  app.add_option("--truncate", truncation, "keep subgroups of order at most p^(N+1)");
  app.add_option("--homology", homology_dim, "compute integer homology up to degree D");
  app.add_option("--json", json_path, "write the report as JSON");
  app.add_option("--export-poset", poset_path, "write the poset as JSON");
  app.add_option("--export-complex", complex_path, "write the order complex as JSON");
  app.add_option("--threads", lim.threads, "worker threads")->default_val(1);
  app.add_option("--cap-elements", lim.elements, "max elements enumerated from a group")->capture_default_str();
  app.add_option("--cap-orbit", lim.orbit, "max orbit length")->capture_default_str();
  app.add_option("--cap-chains", lim.chains, "max maximal chains of an order complex")->capture_default_str();
  app.add_option("--cap-subgroups", lim.subgroup_count, "max subgroups produced by an enumeration")->capture_default_str();
  app.add_option("--cap-subgroup-elements", lim.subgroup_elements, "max elements stored per subgroup")
      ->capture_default_str();
  app.add_option("--cap-p-group", lim.p_group_order, "max order of a p-group whose subgroups are enumerated")
      ->capture_default_str();
  app.add_option("--cap-matrix", lim.matrix_entries, "max nonzeros of an integer matrix")->capture_default_str();
  app.add_option("--cap-dense", lim.dense_matrix, "max entries of the dense Smith normal form remainder")
      ->capture_default_str();
  app.add_option("--max-relator-length", lim.relator_length, "longest relator used to eliminate a generator")
      ->capture_default_str();
  bool check = false;
  app.add_flag("--check-invariants", check, "cross-check poset, complex and topology results");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  bool extended = false;
  unsigned verify_threads = 1;
  verify->add_flag("--extended", extended, "include the J1 and A10 rows");
  verify->add_option("--threads", verify_threads, "worker threads")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : invalid_input;
  }

  try {
    if (*verify) return verify_main(extended, verify_threads);
    if (cfg.group_spec.empty()) throw psc::InvalidInput("cli", "--group is required");
    cfg.kind = psc::parse_poset_kind(poset);
    cfg.truncation = truncation;
    cfg.homology_dim = homology_dim;
    cfg.check_invariants = check;
    return run_main(cfg, json_path, poset_path, complex_path);
  } catch (const psc::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cap_exceeded;
  } catch (const psc::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}
