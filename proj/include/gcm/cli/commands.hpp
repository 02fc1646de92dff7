#pragma once

// The gcmtool subcommands, callable in-process. Exit codes:
//   0 ok, 2 bad flags or invalid parameters, 3 I/O failure,
//   4 flat energy curve (no motion), 5 invalid frame (A <= 0).

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "gcm/geometry.hpp"

namespace gcm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitFlat = 4;
inline constexpr int kExitInvalidFrame = 5;

/// `args` excludes the program name, e.g. {"scan", "--in", "seq.stv"}.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// |k| of the largest |f| on the square lattice step * Z^2 restricted to
/// |k| <= radius. Ties keep the first sample in (ky, kx) scan order.
double magnitude_argmax_radius(const std::function<double(Vec2)>& f, double step, double radius);

}  // namespace gcm::cli
