#pragma once

// Subcommands of the `tatepol` tool. Each returns the process exit code:
// 0 success, 1 mathematical failure, 2 input error. Reports go to `out`
// as JSON, diagnostics to `err`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tatepol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_polarize(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_family(const std::string& path, const std::optional<std::string>& base_change, std::ostream& out,
               std::ostream& err);

struct RandomOptions {
  std::int64_t genus = 1;
  std::int64_t toric_rank = 0;
  std::uint64_t seed = 0;
  bool ample = false;
};

int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace tatepol::cli
