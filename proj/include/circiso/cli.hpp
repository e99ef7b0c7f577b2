#pragma once

#include <iosfwd>

namespace circiso {

/// Exit status: 0 success, 1 verdict mismatch, 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circiso
