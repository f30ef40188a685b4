#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bdd {

/// Command-line front end. Results go to `out`, diagnostics and traces
/// to `err`. Exit codes: 0 success (or YES), 1 NO / failed
/// verification, 2 usage error, 3 input error, 4 scale refusal.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace bdd
