#pragma once

// Frame-bound estimates for a discretized 2D+T wavelet family
//   a = a0^l, c = c0^n, theta = q theta0,  theta0 = pi/q1,
// with translation steps (bx0, by0, tau0). The bounds follow the 2D+T
// extension of Daubechies' estimate:
//   A = (2 pi)^(3/2) / (bx0 by0 tau0) (Lambda_- - gamma)
//   B = (2 pi)^(3/2) / (bx0 by0 tau0) (Lambda_+ + gamma)
// with
//   Gamma(b, tau) = sup_{k,w} sum_{l,n,q} |psi^(D k, E w)| |psi^(D (k - b), E (w - tau))|
//   gamma = sum_{(mx,my,p) != 0} sqrt(Gamma(u, tau_p) Gamma(-u, -tau_p)),
//   u = 2 pi (mx / bx0, my / by0), tau_p = 2 pi p / tau0.
// Extrema and suprema are searched on one period of the scale/rotation
// lattice, so the report is an estimate, not a certified bound.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "gcm/geometry.hpp"
#include "gcm/kernels.hpp"

namespace gcm {

/// Inclusive integer range.
struct IndexRange {
  int lo = 0;
  int hi = 0;
  int count() const { return hi - lo + 1; }
  bool contains(int v) const { return v >= lo && v <= hi; }
};

struct Discretization {
  double a0 = 2.0;
  double c0 = 2.0;
  int q1 = 8;                       ///< theta0 = pi / q1
  IndexRange scale{-4, 4};          ///< l
  IndexRange speed{-4, 4};          ///< n
  std::optional<IndexRange> rotation;  ///< q; unset = one full turn, [1 - q1, q1]
  double bx0 = 0.5;
  double by0 = 0.5;
  double tau0 = 0.5;
  std::size_t grid = 64;            ///< points per axis of the extremum search
  int lattice = 1;                  ///< |mx|, |my|, |p| <= lattice in the gamma sum
  bool polish = true;               ///< golden-section refinement of the grid extrema

  void validate() const;
  double theta0() const { return kPi / q1; }
  IndexRange rotation_range() const;
  bool full_turn() const;
};

/// Mother wavelet in separable form psi^(k, w) = spatial(k) temporal(w).
struct SeparableKernel {
  std::function<double(Vec2)> spatial;
  std::function<double(double)> temporal;
  std::string name;

  double operator()(Vec2 k, double omega) const { return spatial(k) * temporal(omega); }
};

/// The untuned GCM (a_s = a_t = c = 1, theta = 0).
SeparableKernel gcm_mother_kernel(const GcmParams& params);

/// Indicator of the search box (radius [1, a0), angle [0, theta0), omega
/// [1, a0 c0^(2/3))). With single-term ranges its Lambda is exactly 1 on the
/// box and, for lattice steps 2 pi / b larger than the box, Gamma vanishes at
/// every non-zero lattice point: a tight frame, A == B.
SeparableKernel tight_frame_stub(const Discretization& disc);

struct LambdaValue {
  double value = 0.0;
  double tail = 0.0;  ///< largest term on the ring just outside the truncation ranges
};

/// Truncated Lambda(k, w) = sum_{l,n,q} |psi^(a0^l c0^(n/3) r^(-q theta0) k, a0^l c0^(-2n/3) w)|^2.
/// Terms are accumulated in a fixed (l, n, q) loop order. Enlarging a range
/// only inserts nonnegative terms without reordering the others, so with
/// round-to-nearest the result never decreases.
LambdaValue lambda_fn(Vec2 k, double omega, const Discretization& disc,
                      const SeparableKernel& kernel);

struct FrameBoundReport {
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  double gamma = 0.0;
  double A = 0.0;
  double B = 0.0;
  double ratio = 0.0;  ///< B/A, +inf when the frame is invalid
  bool valid = false;  ///< A > 0
  // Locations of the extrema (k, omega).
  Vec2 argmin_k{};
  double argmin_omega = 0.0;
  Vec2 argmax_k{};
  double argmax_omega = 0.0;
  // Truncation diagnostics.
  double lambda_tail = 0.0;  ///< largest dropped Lambda term / Lambda at the extrema
  double gamma_tail = 0.0;   ///< largest gamma term on the outermost lattice shell
  std::string kernel;
};

FrameBoundReport estimate_bounds(const Discretization& disc, const SeparableKernel& kernel);
FrameBoundReport estimate_bounds(const Discretization& disc, const GcmParams& params);

}  // namespace gcm
