#pragma once

#include <iosfwd>

namespace hurstlab::cli {

/// Entry point of the `hurstlab` tool. Returns the process exit status:
/// 0 success, 2 input/parse error, 3 insufficient data, 4 degenerate series,
/// 5 internal numeric failure. Failures write one JSON record to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hurstlab::cli
