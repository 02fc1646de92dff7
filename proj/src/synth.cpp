#include "gcm/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gcm/parallel.hpp"

namespace gcm {

Vec2 GaussianSceneSpec::start_point() const {
  return start.value_or(Vec2{(static_cast<double>(nx) - 1.0) / 2.0,
                             (static_cast<double>(ny) - 1.0) / 2.0});
}

Vec2 GaussianSceneSpec::center_at(double t) const {
  return start_point() + unit(motion_angle) * (v_r * t);
}

void GaussianSceneSpec::validate() const {
  if (nx < 2 || ny < 2 || nt < 2) throw std::invalid_argument("scene grid must be >= 2 on every axis");
  if (!(sigma_x > 0.0 && sigma_y > 0.0)) throw std::invalid_argument("Gaussian widths must be > 0");
  if (!(v_r >= 0.0) || !std::isfinite(v_r)) throw std::invalid_argument("speed v_r must be >= 0");
  if (!(noise_sigma >= 0.0)) throw std::invalid_argument("noise sigma must be >= 0");
  if (!std::isfinite(amplitude) || !std::isfinite(pattern_angle) || !std::isfinite(motion_angle))
    throw std::invalid_argument("scene parameters must be finite");
  if (wrap) return;
  const double margin = 3.0 * std::max(sigma_x, sigma_y);
  for (std::size_t t = 0; t < nt; ++t) {
    const Vec2 c = center_at(static_cast<double>(t));
    if (c.x < margin || c.y < margin || c.x > static_cast<double>(nx - 1) - margin ||
        c.y > static_cast<double>(ny - 1) - margin)
      throw std::invalid_argument("trajectory leaves the volume; enable wrapping or shorten it");
  }
}

SequenceVolume generate(const GaussianSceneSpec& spec) {
  spec.validate();
  const GridDims dims = spec.dims();
  std::vector<double> data(dims.size(), 0.0);

  const double ca = std::cos(spec.pattern_angle);
  const double sa = std::sin(spec.pattern_angle);
  const double inv_x = 1.0 / (2.0 * spec.sigma_x * spec.sigma_x);
  const double inv_y = 1.0 / (2.0 * spec.sigma_y * spec.sigma_y);
  auto pattern = [&](double dx, double dy) {
    const double u = ca * dx + sa * dy;
    const double w = -sa * dx + ca * dy;
    return spec.amplitude * std::exp(-u * u * inv_x - w * w * inv_y);
  };

  // Periodic images out to 12 sigma; dropped terms are below exp(-72).
  const double reach = 12.0 * std::max(spec.sigma_x, spec.sigma_y);
  const auto images_x = spec.wrap ? static_cast<int>(std::ceil(reach / spec.nx)) : 0;
  const auto images_y = spec.wrap ? static_cast<int>(std::ceil(reach / spec.ny)) : 0;
  const double fx = static_cast<double>(spec.nx);
  const double fy = static_cast<double>(spec.ny);

  parallel_for(dims.nt, [&](std::size_t t) {
    Vec2 c = spec.center_at(static_cast<double>(t));
    if (spec.wrap) {
      c.x -= fx * std::floor(c.x / fx);
      c.y -= fy * std::floor(c.y / fy);
    }
    for (std::size_t y = 0; y < dims.ny; ++y)
      for (std::size_t x = 0; x < dims.nx; ++x) {
        double v = 0.0;
        for (int iy = -images_y; iy <= images_y; ++iy)
          for (int ix = -images_x; ix <= images_x; ++ix)
            v += pattern(static_cast<double>(x) - c.x + ix * fx,
                         static_cast<double>(y) - c.y + iy * fy);
        data[dims.index(x, y, t)] = v;
      }
  });

  SequenceVolume seq(dims, std::move(data));
  if (spec.noise_sigma > 0.0) return add_noise(seq, spec.noise_sigma, spec.seed);
  return seq;
}

SequenceVolume add_noise(const SequenceVolume& seq, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("noise sigma must be >= 0");
  if (sigma == 0.0) return seq;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<double> out(seq.data().begin(), seq.data().end());
  for (double& v : out) v += noise(rng);
  return SequenceVolume(seq.dims(), std::move(out));
}

double mean_power(const SequenceVolume& seq) {
  double sum = 0.0;
  for (double v : seq.data()) sum += v * v;
  return sum / static_cast<double>(seq.data().size());
}

double noise_sigma_for_snr(const SequenceVolume& seq, double snr_db) {
  return std::sqrt(mean_power(seq) / std::pow(10.0, snr_db / 10.0));
}

}  // namespace gcm
