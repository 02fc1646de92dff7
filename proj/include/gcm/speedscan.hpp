#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcm/kernels.hpp"
#include "gcm/stcwt.hpp"

namespace gcm {

enum class Refine { none, golden_section };

/// Speed/orientation sweep parameters. Defaults follow the travelling-Gaussian
/// benchmark: c in [1, 6] step 0.25, alpha = pi/16, a_s = a_t = 3, l = m = 10.
struct ScanConfig {
  double c_min = 1.0;
  double c_max = 6.0;
  double c_step = 0.25;
  double theta = 0.0;
  double a_s = 3.0;
  double a_t = 3.0;
  double alpha = kPi / 16.0;
  int l = 10;
  int m = 10;
  double sigma = 1.0;
  std::optional<double> omega0;
  /// Frames N0 summed into E_tot; nullopt selects every frame.
  std::optional<std::vector<std::size_t>> frames;
  Refine refine = Refine::none;
  double refine_tolerance = 1e-3;
  /// 0 = one worker per hardware thread.
  unsigned workers = 0;

  void validate() const;
  /// c_j = c_min + j c_step for every c_j <= c_max.
  std::vector<double> speed_grid() const;
  GcmParams gcm_params() const;
  GroupElement tuning(double c) const;
};

struct EnergySample {
  double c = 0.0;
  double energy = 0.0;
};

struct EnergyCurve {
  std::vector<EnergySample> samples;  ///< strictly increasing c
  double v_m = 0.0;                   ///< located peak
  double peak_energy = 0.0;
  std::size_t grid_peak = 0;          ///< index of the grid argmax
  bool refined = false;
  /// No detectable motion: the curve is flat (max/min < 1 + 1e-9) or the
  /// sequence has no energy off the w = 0 plane.
  bool no_motion = false;
};

/// Relative flatness below which a curve is declared motionless.
inline constexpr double kFlatCurveThreshold = 1e-9;

EnergyCurve scan_speeds(const SpectralEngine& engine, const ScanConfig& config);
EnergyCurve scan_speeds(const SequenceVolume& seq, const ScanConfig& config);

struct SweepPoint {
  double parameter = 0.0;  ///< theta or alpha
  double v_m = 0.0;
  double peak_energy = 0.0;
  bool no_motion = false;
};

std::vector<SweepPoint> scan_orientations(const SpectralEngine& engine, const ScanConfig& config,
                                          const std::vector<double>& thetas);
std::vector<SweepPoint> scan_orientations(const SequenceVolume& seq, const ScanConfig& config,
                                          const std::vector<double>& thetas);

std::vector<SweepPoint> aperture_sweep(const SpectralEngine& engine, const ScanConfig& config,
                                       const std::vector<double>& alphas);
std::vector<SweepPoint> aperture_sweep(const SequenceVolume& seq, const ScanConfig& config,
                                       const std::vector<double>& alphas);

/// Maximizes f on [lo, hi] by golden-section search until the bracket is
/// narrower than `tolerance`. Returns the abscissa of the best point seen.
template <class F>
double golden_section_max(F&& f, double lo, double hi, double tolerance);

}  // namespace gcm

#include "gcm/detail/golden_section.hpp"
