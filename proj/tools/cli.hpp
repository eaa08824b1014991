#pragma once

#include <iosfwd>

namespace gujhin::cli {

/// Entry point shared by the executable and the tests. Payload goes to
/// `out`, diagnostics and traces to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gujhin::cli
