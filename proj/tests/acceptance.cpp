// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance              default rows
//   acceptance --extended   default rows plus the J1 and A10 rows

#include <cstring>
#include <iostream>

#include "psc/verify.hpp"

int main(int argc, char** argv) {
  bool extended = false;
  unsigned threads = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0)
      extended = true;
    else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
      threads = static_cast<unsigned>(std::stoul(argv[++i]));
    else {
      std::cerr << "usage: acceptance [--extended] [--threads K]\n";
      return 2;
    }
  }
  int failed = 0;
  psc::run_acceptance(extended, threads, [&](const psc::AcceptanceRow& row) {
    std::cout << psc::format_row(row) << std::endl;
    failed += row.pass ? 0 : 1;
  });
  std::cout << (failed ? std::to_string(failed) + " criteria FAILED" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
