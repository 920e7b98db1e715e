#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace torus2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitMismatch = 4;

struct CommandConfig {
  std::string subcommand;
  // count: "A", "B" or "C".
  std::string quantity;
  int m = 0;
  int s = 3;
  std::optional<int> max_m;
  std::optional<int> n;
  // polygon:m | simplex:n | prism | annulus | file:PATH
  std::string space;
  // disk | rp2 | torus | custom:FILE
  std::string surface;
  std::optional<int> genus;
  std::optional<bool> orientable;
  std::string lambda;
  bool verify = false;
  bool export_cells = false;
  Format format = Format::plain;
  std::optional<std::uint64_t> budget;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
  std::string error;
};

RunResult run(const CommandConfig& config);

// Parses argv into a config and runs it; CLI11 usage errors map to exit 2.
RunResult run_args(const std::vector<std::string>& args);

}  // namespace torus2::cli
