#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "planegraph/enumerate.hpp"

namespace planegraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::string input;
  int workers = 1;
  std::optional<std::string> format;
  std::string out_path;
  EnumerationLimits limits = EnumerationLimits::from_environment();
  std::vector<std::string> claims;
  std::string gen_kind;
  int gen_n = 0;
  std::uint64_t seed = 0;
  int n_max = 0;
};

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planegraph::cli
