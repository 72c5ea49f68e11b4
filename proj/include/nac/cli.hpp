#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nac {

/// Runs one subcommand (exists, enumerate, count, classes, reduce, bench,
/// oracle). `args` excludes the program name.
///
/// Exit codes: 0 success; 1 no NAC-coloring (exists), SAT/NAC disagreement
/// (reduce --verify) or a timed-out record (bench --strict); 2 input error;
/// 3 search timeout.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nac
