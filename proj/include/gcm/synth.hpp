#pragma once

#include <cstdint>
#include <optional>

#include "gcm/geometry.hpp"
#include "gcm/volume.hpp"

namespace gcm {

/// A rotated anisotropic 2D Gaussian travelling at constant velocity.
struct GaussianSceneSpec {
  std::size_t nx = 64;
  std::size_t ny = 64;
  std::size_t nt = 16;
  double sigma_x = 1.0;
  double sigma_y = 8.0;
  double pattern_angle = 0.0;  ///< orientation of the Gaussian's principal axes
  double v_r = 3.0;            ///< pixels/frame
  double motion_angle = 0.0;
  std::optional<Vec2> start;   ///< frame-0 centre; unset = volume centre
  double amplitude = 1.0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  /// Periodic images instead of an in-bounds requirement.
  bool wrap = true;

  GridDims dims() const { return {nx, ny, nt}; }
  Vec2 start_point() const;
  Vec2 center_at(double t) const;
  void validate() const;
};

/// Samples the analytic Gaussian at every pixel centre of every frame (so
/// sub-pixel displacements are exact), then adds noise if requested.
SequenceVolume generate(const GaussianSceneSpec& spec);

/// Adds i.i.d. N(0, sigma^2) noise from a seeded generator. sigma == 0 returns
/// the input unchanged.
SequenceVolume add_noise(const SequenceVolume& seq, double sigma, std::uint64_t seed);

/// Mean power of the sequence, mean(s^2).
double mean_power(const SequenceVolume& seq);

/// Noise standard deviation giving the requested SNR (dB) relative to the
/// sequence's mean power.
double noise_sigma_for_snr(const SequenceVolume& seq, double snr_db);

}  // namespace gcm
