#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistspin {

  namespace exit_code {
    inline constexpr int ok              = 0;
    inline constexpr int usage           = 1;
    inline constexpr int budget_exceeded = 2;
  }  // namespace exit_code

  // Runs the command line `args` (args[0] is the program name). Everything
  // is written to `out`/`err`; the return value is the process exit code.
  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err);

}  // namespace twistspin
