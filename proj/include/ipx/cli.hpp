#pragma once

#include <iosfwd>

#include "ipx/error.hpp"

namespace ipx {

/// Process exit status for an error code.
int exit_code(ErrorCode code) noexcept;

/// Entry point of the ipx command-line tool. Subcommands: check, bound,
/// sweep, sharpness. Reports go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ipx
