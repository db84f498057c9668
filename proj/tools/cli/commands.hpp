#pragma once

#include <iosfwd>

namespace spinaltri::cli {

/// Parses argv and runs the chosen verb. Returns 0 on success, 1 on a domain
/// error or a failed verification, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinaltri::cli
