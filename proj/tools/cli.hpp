#ifndef SHELLKIT_TOOLS_CLI_HPP
#define SHELLKIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace shellkit::cli {

/// Exit statuses of `run`.
enum Status : int {
	kOk = 0,
	/// Invalid domain input (comparable facets, cyclic poset, oracle mismatch, ...).
	kDomainError = 1,
	/// Bad flags or unparsable files.
	kUsageError = 2,
};

/// Runs one command line (without the program name). `in` backs the "-"
/// file argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace shellkit::cli

#endif
