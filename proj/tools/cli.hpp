#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bistable::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_usage = 2;

/// Environment variable holding the default `game serve` port.
inline constexpr const char* port_env = "BISTABLE_PORT";
inline constexpr int fallback_port = 8080;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bistable::cli
