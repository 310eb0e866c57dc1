#pragma once

#include <iosfwd>
#include <optional>

namespace nonfree {

/// Exit codes: 0 result, 1 no result, 2 invalid input.
inline constexpr int kExitResult = 0;
inline constexpr int kExitNoResult = 1;
inline constexpr int kExitInvalid = 2;

/// Runs the command line. JSON lines go to `out`, diagnostics to `err`.
/// `env_workers` is the worker count taken from the environment, if any.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            std::optional<int> env_workers = std::nullopt);

/// Parses NONFREE_WORKERS; nullopt when unset or malformed.
std::optional<int> workers_from_env();

}  // namespace nonfree
