#ifndef COMPOQ_TOOLS_CLI_HPP
#define COMPOQ_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace compoq::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;     // an identity or agreement check failed
inline constexpr int kExitUsage = 2;       // bad flags or parameters
inline constexpr int kExitInfeasible = 3;  // bounds too large to compute

inline constexpr std::size_t kDefaultOrder = 200;
inline constexpr std::size_t kMaxOrder = 20000;

/// Runs one command line (program name excluded). Data goes to `out` (or the
/// --output file); errors go to `err` as a single JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace compoq::cli

#endif
