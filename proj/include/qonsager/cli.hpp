#ifndef QONSAGER_CLI_HPP
#define QONSAGER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qonsager {

/// Run the command-line interface. Exit codes: 0 success / all passed,
/// 1 usage, 2 verification failure, 3 construction or solver failure,
/// 4 no relation found.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qonsager

#endif
