// The acceptance suite: one function per criterion, each comparing the
// library with the reference models in oracles.hpp and returning a
// pass/fail line.

#ifndef WWP_ACCEPTANCE_HPP_
#define WWP_ACCEPTANCE_HPP_

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace wwp::acceptance {

  struct CriterionResult {
    int         id = 0;
    std::string name;
    bool        passed = false;
    std::string detail;
    double      seconds = 0;
    double      time_limit = 0;  // seconds; 0 when the criterion sets none
  };

  // Runs the command line tool in-process: arguments without the program
  // name, then stdout and stderr. Returns the exit code.
  using CliRunner = std::function<int(std::vector<std::string> const&, std::ostream&,
                                      std::ostream&)>;

  struct Options {
    CliRunner   cli;         // criterion 8 fails without one
    std::string golden_dir;  // frozen scott outputs
    std::ostream* log = nullptr;  // progress notes, if set
  };

  CriterionResult finite_exhaustion(Options const& o);         // 1
  CriterionResult free_group_decider(Options const& o);        // 2
  CriterionResult abelian_decider(Options const& o);           // 3
  CriterionResult dihedral_closed_form(Options const& o);      // 4
  CriterionResult semi_decider_coherence(Options const& o);    // 5
  CriterionResult theta_soundness(Options const& o);           // 6
  CriterionResult embedding_dichotomy(Options const& o);       // 7
  CriterionResult determinism_and_goldens(Options const& o);   // 8

  // The criteria in order; only restricts to the listed ids when non-empty.
  std::vector<CriterionResult> run_all(Options const& o, std::vector<int> const& only = {});

  // "[PASS] 3 abelian decider (12.3 s): ..."
  std::string format_line(CriterionResult const& r);

  // The CLI invocations checked for byte-identical double runs.
  std::vector<std::vector<std::string>> cli_matrix();

  // Golden file name and the CLI arguments producing it.
  struct Golden {
    std::string              file;
    std::vector<std::string> args;
  };
  std::vector<Golden> golden_files();

}  // namespace wwp::acceptance

#endif  // WWP_ACCEPTANCE_HPP_
