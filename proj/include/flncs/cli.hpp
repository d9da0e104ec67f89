#pragma once

#include "flncs/states.hpp"

#include <iosfwd>
#include <string_view>

namespace flncs::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;      // domain or configuration errors
inline constexpr int kNumericalError = 2;

// Relative --output paths are resolved against this directory when it is set.
inline constexpr const char* kOutputDirEnv = "FLNCS_OUTPUT_DIR";

// Accepts "a", "a+bi", "a-bi" (also "bi" and "a+i").
Complex parse_complex(std::string_view text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flncs::cli
