// The wwp command line, callable in-process.

#ifndef WWP_CLI_HPP_
#define WWP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace wwp::cli {

  // Exit codes.
  inline constexpr int kOk       = 0;
  inline constexpr int kNegative = 1;   // a decision came out negative
  inline constexpr int kUnknown  = 2;   // budget exhausted or no decider
  inline constexpr int kUsage    = 64;
  inline constexpr int kBadInput = 65;  // unparsable or inconsistent input

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace wwp::cli

#endif  // WWP_CLI_HPP_
