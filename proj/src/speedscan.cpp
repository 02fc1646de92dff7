#include "gcm/speedscan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gcm/parallel.hpp"

namespace gcm {

void ScanConfig::validate() const {
  if (!(c_min > 0.0 && c_min < c_max && std::isfinite(c_max)))
    throw std::invalid_argument("speed range must satisfy 0 < c_min < c_max");
  if (!(c_step > 0.0 && std::isfinite(c_step)))
    throw std::invalid_argument("c_step must be > 0");
  if (speed_grid().size() < 3)
    throw std::invalid_argument("speed range must hold at least 3 samples");
  if (!(a_s > 0.0 && a_t > 0.0)) throw std::invalid_argument("scales a_s, a_t must be > 0");
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  if (refine == Refine::golden_section && !(refine_tolerance > 0.0))
    throw std::invalid_argument("refinement tolerance must be > 0");
  if (frames && frames->empty()) throw std::invalid_argument("frame selection must not be empty");
  gcm_params().validate();
}

std::vector<double> ScanConfig::speed_grid() const {
  std::vector<double> grid;
  if (!(c_step > 0.0) || !(c_max >= c_min)) return grid;
  const double slack = 1e-9 * c_step;
  for (std::size_t j = 0;; ++j) {
    const double c = c_min + static_cast<double>(j) * c_step;
    if (c > c_max + slack) break;
    grid.push_back(c);
  }
  return grid;
}

GcmParams ScanConfig::gcm_params() const {
  GcmParams p;
  p.l = l;
  p.m = m;
  p.sigma = sigma;
  p.omega0 = omega0;
  p.cone = ConeSpec{alpha, 0.0};
  return p;
}

GroupElement ScanConfig::tuning(double c) const {
  GroupElement g;
  g.theta = theta;
  g.a_s = a_s;
  g.a_t = a_t;
  g.c = c;
  return g;
}

EnergyCurve scan_speeds(const SpectralEngine& engine, const ScanConfig& config) {
  config.validate();
  const GcmParams params = config.gcm_params();
  const auto grid = config.speed_grid();
  auto energy_at = [&](double c) { return engine.energy(config.tuning(c), params, config.frames); };

  EnergyCurve curve;
  curve.samples.resize(grid.size());
  parallel_for(
      grid.size(), [&](std::size_t j) { curve.samples[j] = {grid[j], energy_at(grid[j])}; },
      config.workers);

  // Strict comparison: ties go to the smaller c.
  double lowest = curve.samples[0].energy;
  for (std::size_t j = 0; j < curve.samples.size(); ++j) {
    if (curve.samples[j].energy > curve.samples[curve.grid_peak].energy) curve.grid_peak = j;
    lowest = std::min(lowest, curve.samples[j].energy);
  }
  curve.v_m = curve.samples[curve.grid_peak].c;
  curve.peak_energy = curve.samples[curve.grid_peak].energy;

  const double highest = curve.peak_energy;
  const bool flat = highest == 0.0 || (lowest > 0.0 && highest / lowest < 1.0 + kFlatCurveThreshold);
  curve.no_motion = flat || engine.moving_energy_fraction() < kFlatCurveThreshold;

  if (config.refine == Refine::golden_section && !curve.no_motion) {
    const double lo = std::max(config.c_min, curve.v_m - config.c_step);
    const double hi = std::min(grid.back(), curve.v_m + config.c_step);
    const double c = golden_section_max(energy_at, lo, hi, config.refine_tolerance);
    const double e = energy_at(c);
    if (e >= curve.peak_energy) {
      curve.v_m = c;
      curve.peak_energy = e;
    }
    curve.refined = true;
  }
  return curve;
}

EnergyCurve scan_speeds(const SequenceVolume& seq, const ScanConfig& config) {
  config.validate();
  return scan_speeds(SpectralEngine(seq), config);
}

namespace {

template <class Apply>
std::vector<SweepPoint> sweep(const SpectralEngine& engine, const ScanConfig& config,
                              const std::vector<double>& values, Apply apply) {
  std::vector<SweepPoint> out;
  out.reserve(values.size());
  for (double v : values) {
    ScanConfig cfg = config;
    apply(cfg, v);
    const auto curve = scan_speeds(engine, cfg);
    out.push_back({v, curve.v_m, curve.peak_energy, curve.no_motion});
  }
  return out;
}

}  // namespace

std::vector<SweepPoint> scan_orientations(const SpectralEngine& engine, const ScanConfig& config,
                                          const std::vector<double>& thetas) {
  return sweep(engine, config, thetas, [](ScanConfig& c, double v) { c.theta = v; });
}

std::vector<SweepPoint> scan_orientations(const SequenceVolume& seq, const ScanConfig& config,
                                          const std::vector<double>& thetas) {
  config.validate();
  return scan_orientations(SpectralEngine(seq), config, thetas);
}

std::vector<SweepPoint> aperture_sweep(const SpectralEngine& engine, const ScanConfig& config,
                                       const std::vector<double>& alphas) {
  for (double a : alphas)
    if (!(a > 0.0 && a < kPi / 2.0)) throw std::invalid_argument("apertures must lie in (0, pi/2)");
  return sweep(engine, config, alphas, [](ScanConfig& c, double v) { c.alpha = v; });
}

std::vector<SweepPoint> aperture_sweep(const SequenceVolume& seq, const ScanConfig& config,
                                       const std::vector<double>& alphas) {
  config.validate();
  return aperture_sweep(SpectralEngine(seq), config, alphas);
}

}  // namespace gcm
