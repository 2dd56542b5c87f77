#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctxlab::cli {

/// Exit codes: 0 success, 1 a requested assertion failed, 2 usage, parse or
/// input errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ctxlab::cli
