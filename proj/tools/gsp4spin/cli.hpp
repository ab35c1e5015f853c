#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsp4::cli {

/// Exit codes: 0 success, 1 input error, 2 mathematically empty result
/// (no Bessel model), 3 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gsp4::cli
