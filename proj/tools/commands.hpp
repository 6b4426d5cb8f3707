#ifndef POLYHARM_TOOLS_COMMANDS_HPP
#define POLYHARM_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polyharm::cli {

// Exit codes: 0 success, 1 cross-check failure, 2 usage error.
int run(int argc, char** argv);

// argv-style entry point used by the tests to drive commands in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyharm::cli

#endif
