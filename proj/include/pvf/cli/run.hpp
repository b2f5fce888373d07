#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pvf::cli {

/// Command-line entry point without argv[0]. Exit status: 0 success or true,
/// 1 false predicate, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Randomized invariant suite; writes one line per check.
bool selftest(std::ostream& out, unsigned long long seed = 20240601ULL);

}  // namespace pvf::cli
