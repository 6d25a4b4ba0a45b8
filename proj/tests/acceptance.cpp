// Runs every acceptance criterion and prints one line per criterion.
//
//   acceptance [--only 1,2] [--golden DIR] [--verbose] [--expect-fail 5]
//   acceptance --write-goldens DIR    regenerate the frozen scott outputs
//
// Without --expect-fail the exit status is 0 iff every criterion passes.
// With it, the status is 0 iff the failing criteria are exactly the listed
// ones, so a listed criterion that starts passing also fails the run.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "wwp/acceptance.hpp"

int main(int argc, char** argv) {
  wwp::acceptance::Options o;
  o.cli        = wwp::cli::run;
  o.golden_dir = WWP_GOLDEN_DIR;
  std::vector<int> only;
  std::set<int>    expected_failures;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--verbose") {
      o.log = &std::cerr;
    } else if (a == "--write-goldens" && i + 1 < argc) {
      std::string const dir = argv[++i];
      for (auto const& g : wwp::acceptance::golden_files()) {
        std::ofstream out(dir + "/" + g.file, std::ios::binary);
        if (wwp::cli::run(g.args, out, std::cerr) != 0 || !out) {
          std::cerr << "failed: " << g.file << '\n';
          return 1;
        }
      }
      return 0;
    } else if (a == "--golden" && i + 1 < argc) {
      o.golden_dir = argv[++i];
    } else if (a == "--only" && i + 1 < argc) {
      std::istringstream in(argv[++i]);
      for (std::string part; std::getline(in, part, ',');) {
        only.push_back(std::stoi(part));
      }
    } else if (a == "--expect-fail" && i + 1 < argc) {
      std::istringstream in(argv[++i]);
      for (std::string part; std::getline(in, part, ',');) {
        expected_failures.insert(std::stoi(part));
      }
    } else {
      std::cerr << "usage: acceptance [--only 1,2] [--golden DIR] [--verbose] [--expect-fail 5]"
                   " | --write-goldens DIR\n";
      return 64;
    }
  }
  auto results = wwp::acceptance::run_all(o, only);
  std::size_t   passed = 0;
  std::set<int> failed;
  for (auto const& r : results) {
    std::cout << wwp::acceptance::format_line(r) << std::endl;
    passed += r.passed ? 1 : 0;
    if (!r.passed) {
      failed.insert(r.id);
    }
  }
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  if (expected_failures.empty()) {
    return failed.empty() ? 0 : 1;
  }
  // Only criteria that actually ran can be held to the list.
  std::set<int> listed;
  for (int id : expected_failures) {
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) {
      listed.insert(id);
    }
  }
  for (int id : listed) {
    if (!failed.count(id)) {
      std::cout << "criterion " << id << " was expected to fail but passed" << std::endl;
    } else {
      std::cout << "criterion " << id << " failed as expected" << std::endl;
    }
  }
  for (int id : failed) {
    if (!listed.count(id)) {
      std::cout << "criterion " << id << " failed unexpectedly" << std::endl;
    }
  }
  return failed == listed ? 0 : 1;
}
