#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line surface. run_cli is re-entrant so tests can drive it
// in-process; tools/main.cpp is a thin wrapper.
//
// Exit codes: 0 success, 1 domain error, 2 parse error. Output is
// byte-deterministic for a given argument vector. If SEGRE_ACM_CACHE
// names a directory, successful outputs are cached there keyed by a
// hash of the arguments (safe to delete at any time).

namespace segre {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace segre
