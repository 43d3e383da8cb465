#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hanoi {

// Command-line front end (solve, verify, count, oracle, table1, bounds,
// partition, check). `in` feeds the verify subcommand. Returns the process
// exit status: 0 on success, 1 on failed verification / check violations /
// runtime errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

} // namespace hanoi
