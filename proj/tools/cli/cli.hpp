#pragma once

#include <span>
#include <string>

#include "dyadic/triangle.hpp"

namespace dyadic::cli {

// Exit codes: 0 success (including a "false" answer), 1 domain error,
// 2 malformed input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;

struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one command; `args` excludes the program name.
CommandOutput dispatch(std::span<const std::string> args);

struct SvgOptions {
  bool grid = true;
};

/// Deterministic SVG of the triangle and its points on the 2^-depth grid.
std::string render_svg(const Triangle& t, int depth, const SvgOptions& options = {});

/// Exact decimal expansion of a dyadic value.
std::string to_decimal(const Dyadic& x);

}  // namespace dyadic::cli
