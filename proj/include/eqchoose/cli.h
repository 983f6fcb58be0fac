#ifndef EQCHOOSE_CLI_H_
#define EQCHOOSE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace eqchoose {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,      // verification failed or no coloring exists
  kExitUsage = 2,       // bad arguments, schema or precondition violation
  kExitBudget = 3,      // oracle budget exceeded
};

// Runs one command. args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace eqchoose

#endif  // EQCHOOSE_CLI_H_
