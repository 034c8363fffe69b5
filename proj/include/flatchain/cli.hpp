#ifndef FLATCHAIN_CLI_HPP
#define FLATCHAIN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace flatchain {

/**
 * Command-line front end. Exit codes: 0 success, 1 parse or I/O error,
 * 2 precondition violation, solver failure or a FAIL verdict.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}   // namespace flatchain

#endif
