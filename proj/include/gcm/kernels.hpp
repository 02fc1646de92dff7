#pragma once

// Fourier-domain wavelets and filters: 1D Cauchy (Paul), 2D Morlet, 2D Cauchy,
// 2D Gaussian-Conical (GC) and the separable 2D+T Gaussian-Conical-Morlet (GCM),
// together with the motion-group action (translation, rotation, dilation,
// speed tuning) and the centered low-pass variant of the tuned GCM.
//
// All functions are pure and safe to call concurrently.

#include <complex>
#include <optional>

#include "gcm/geometry.hpp"

namespace gcm {

/// Temporal speed exponent p: tuning to speed c scales omega by c^-p.
inline constexpr double kSpeedExponentP = 2.0 / 3.0;
/// Spatial speed exponent q: tuning to speed c scales k by c^q.
inline constexpr double kSpeedExponentQ = 1.0 / 3.0;

/// Strictly convex cone C(-alpha, alpha) around the axis at angle `theta_axis`.
struct ConeSpec {
  double alpha = kPi / 16.0;  ///< half-aperture, 0 < alpha < pi/2
  double theta_axis = 0.0;    ///< 0 = positive kx axis

  void validate() const;

  /// Edge unit vector e_{+alpha} (sign > 0) or e_{-alpha} (sign < 0).
  Vec2 edge(int sign) const;
  /// Dual-cone edge e_{+alpha~} or e_{-alpha~}, alpha~ = pi/2 - alpha.
  Vec2 dual_edge(int sign) const;

  /// Edge points count as inside.
  bool contains(Vec2 k) const;
};

struct GcmParams {
  int l = 10;
  int m = 10;
  double sigma = 1.0;
  /// Temporal Morlet centre. Unset means sqrt(l+m), which makes the tuned
  /// filter's centre slope omega/kx equal to the tuning speed c.
  std::optional<double> omega0;
  ConeSpec cone;

  void validate() const;

  /// Center correction chi(sigma) = sqrt(l+m) (sigma-1)/sigma.
  double chi() const;
  /// Radial position of the GC maximum along the cone axis, sqrt(l+m).
  double center_radius() const;
  double temporal_center() const;
};

struct MorletParams {
  Vec2 k0{6.0, 0.0};
  double epsilon = 1.0;  ///< anisotropy, A = diag[1, epsilon^-1/2]

  void validate() const;
};

/// Motion-group element g = {b, tau, theta; a_s, a_t, c}.
struct GroupElement {
  Vec2 b{};
  double tau = 0.0;
  double theta = 0.0;
  double a_s = 1.0;
  double a_t = 1.0;
  double c = 1.0;

  static GroupElement identity() { return {}; }
  void validate() const;
};

double eval_cauchy_1d(double omega, int m);

double eval_morlet_2d(Vec2 k, const MorletParams& params, bool with_correction = false);

/// Requires eta strictly inside the cone; throws std::invalid_argument otherwise.
double eval_cauchy_2d(Vec2 k, const ConeSpec& cone, int l, int m, Vec2 eta);

double eval_gc_2d(Vec2 k, const GcmParams& params);

/// eval_gc_2d with the cone trigonometry hoisted out, for tight loops.
class GcEvaluator {
 public:
  explicit GcEvaluator(const GcmParams& params);
  double operator()(Vec2 k) const;

 private:
  GcmParams params_;
  double chi_;
  double cos_axis_, sin_axis_;
  double sin_alpha_, cos_alpha_;
};

/// exp(-1/2 (omega - omega0)^2)
double eval_morlet_1d(double omega, double omega0);

double eval_gcm(Vec2 k, double omega, const GcmParams& params);

// Tuned filter as separate spatial and temporal factors. The full filter is
// exp(-i(k.b + omega tau)) * spatial * temporal; the a_s^-1 and a_t^-1/2
// prefactors live in the respective factor. No argument validation here, the
// callers validate once per filter.
double tuned_spatial_factor(const GroupElement& g, const GcmParams& params, Vec2 k,
                            bool centered);
double tuned_temporal_factor(const GroupElement& g, const GcmParams& params, double omega,
                             bool centered);

/// GCM acted on by g, evaluated at (k, omega).
std::complex<double> apply_group(const GroupElement& g, const GcmParams& params, Vec2 k,
                                 double omega);

/// k0 = (1/a_s)(1/a_t)(sqrt(l+m)/c^q)(cos theta, sin theta), theta measured
/// from the kx axis and including the cone axis.
///
/// The 1/a_t factor mixes temporal scale into a spatial wave-vector. It is
/// kept as in the original derivation; for a_t != 1 the centered filter's
/// spatial peak is therefore not exactly at the origin.
Vec2 central_wavevector(const GroupElement& g, const GcmParams& params);

/// omega0 c^p / a_t, the temporal centre of the tuned filter.
double central_temporal_frequency(const GroupElement& g, const GcmParams& params);

/// Low-pass directional filter: the tuned GCM translated so its centre sits
/// at the Fourier origin (conical factors at k + k0, temporal Morlet with
/// omega0 cancelled). The apex of the support cone moves to -k0.
std::complex<double> eval_centered_gcm(const GroupElement& g, const GcmParams& params, Vec2 k,
                                       double omega);

/// Angular resolving power of the 2D Morlet, 2 acot(|k0| sqrt(eps)). Only
/// meaningful for |k0| >> 1.
double arp_morlet(const MorletParams& params);
/// Angular resolving power of a conical wavelet: its opening angle 2 alpha.
double arp_conical(const ConeSpec& cone);

}  // namespace gcm
