#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fixig {

// Command-line front end (fix | aut | mdim | build | predict | verify |
// enumerate). Exit codes: 0 success (and all-pass for verify), 1 claim FAIL
// or computation error, 2 usage error. Results go to `out`, diagnostics to
// `err`; `in` backs "--graph -" and the default stdin graph source.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace fixig
