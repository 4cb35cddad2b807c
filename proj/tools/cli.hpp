#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pantsbd/scalar.hpp"

namespace pantsbd::cli {

enum class OutputFormat { json, csv };

struct GridAxis {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  std::vector<double> points() const;
};

struct RunConfig {
  int n = 2;
  /// Raw "a,b,c" text from --lengths or --abc; at most one is set.
  std::optional<std::string> lengths;
  std::optional<std::string> abc;
  /// Unset means: float for lengths input, exact otherwise.
  std::optional<Backend> mode;
  OutputFormat format = OutputFormat::json;
  std::string out;  // empty: standard output

  int samples = 25;
  std::uint64_t seed = 42;
  int max_n = 5;

  /// Grid text "lA:start:stop:steps,lB:...,lC:...".
  std::string grid;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verify_failed = 1;
inline constexpr int usage = 2;
inline constexpr int degenerate = 3;
}  // namespace exit_code

/// Parses "lA:0.5:3:5,lB:...,lC:..." into axes ordered (lA, lB, lC).
std::array<GridAxis, 3> parse_grid(const std::string& text);

int run_coords(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point (argument parsing plus dispatch).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pantsbd::cli
