#ifndef TERMITE_CLI_HPP
#define TERMITE_CLI_HPP

#include <string>
#include <vector>

namespace termite::cli {

// Runs the command line given as arguments (without the program name).
// Returns the process exit status; 0 iff all requested outputs were written.
int run(const std::vector<std::string>& args);

}  // namespace termite::cli

#endif  // TERMITE_CLI_HPP
