#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "gcm/stcwt.hpp"
#include "gcm/synth.hpp"

using namespace gcm;

namespace {

double frame_sum(const SequenceVolume& s, std::size_t t) {
  const auto f = s.frame(t);
  return std::accumulate(f.begin(), f.end(), 0.0);
}

}  // namespace

TEST_CASE("default scene and trajectory", "[synth]") {
  GaussianSceneSpec s;
  const auto seq = generate(s);
  CHECK(seq.dims() == GridDims{64, 64, 16});
  CHECK(s.start_point() == Vec2{31.5, 31.5});
  CHECK(s.center_at(2.0) == Vec2{37.5, 31.5});
  // Brightest pixel of frame t sits next to the analytic centre.
  for (std::size_t t = 0; t < 8; ++t) {
    std::size_t best = 0;
    const auto f = seq.frame(t);
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i] > f[best]) best = i;
    const double cx = s.center_at(static_cast<double>(t)).x;
    CHECK(std::abs(static_cast<double>(best % 64) - cx) <= 0.5);
  }
}

TEST_CASE("zero speed gives identical frames", "[synth]") {
  GaussianSceneSpec s;
  s.v_r = 0.0;
  const auto seq = generate(s);
  for (std::size_t t = 1; t < s.nt; ++t) {
    const auto a = seq.frame(0), b = seq.frame(t);
    REQUIRE(std::equal(a.begin(), a.end(), b.begin()));
  }
}

TEST_CASE("isotropic pattern ignores the pattern angle", "[synth]") {
  GaussianSceneSpec s;
  s.sigma_x = s.sigma_y = 2.5;
  const auto a = generate(s);
  s.pattern_angle = 0.7;
  const auto b = generate(s);
  for (std::size_t i = 0; i < a.data().size(); ++i) REQUIRE(std::abs(a.data()[i] - b.data()[i]) <= 1e-12);
}

TEST_CASE("mass conservation for in-bounds trajectories", "[synth][invariant]") {
  GaussianSceneSpec s;
  s.nx = s.ny = 64;
  s.nt = 8;
  s.sigma_x = 1.5;
  s.sigma_y = 2.0;
  s.pattern_angle = 0.3;
  s.v_r = 1.37;
  s.motion_angle = 0.2;
  s.start = Vec2{20.0, 25.0};
  s.wrap = false;
  const auto seq = generate(s);
  // Poisson summation: the pixel sum of a sampled Gaussian is its integral up to exp(-2 pi^2 sigma^2).
  const double integral = 2.0 * kPi * s.sigma_x * s.sigma_y * s.amplitude;
  for (std::size_t t = 0; t < s.nt; ++t) {
    INFO("t=" << t);
    CHECK(std::abs(frame_sum(seq, t) - frame_sum(seq, 0)) <= 1e-9 * frame_sum(seq, 0));
    CHECK(std::abs(frame_sum(seq, t) - integral) <= 1e-9 * integral);
  }
}

TEST_CASE("out-of-bounds trajectories are rejected without wrapping", "[synth]") {
  GaussianSceneSpec s;
  s.wrap = false;
  CHECK_THROWS_AS(generate(s), std::invalid_argument);
  s.v_r = -1.0;
  s.wrap = true;
  CHECK_THROWS_AS(generate(s), std::invalid_argument);
  s = {};
  s.sigma_x = 0.0;
  CHECK_THROWS_AS(generate(s), std::invalid_argument);
}

TEST_CASE("integer motion lies exactly on the plane omega = -v kx", "[synth]") {
  // With nt = nx and v = 1 pixel/frame, every frame is an exact circular shift,
  // so the spectrum is confined to the DFT bins with w = -kx.
  GaussianSceneSpec s;
  s.nx = s.ny = s.nt = 32;
  s.v_r = 1.0;
  s.start = Vec2{10.0, 16.0};
  const auto spectrum = forward_fft3(generate(s));
  const GridDims d = spectrum.dims;
  double on = 0.0, total = 0.0;
  for (std::size_t t = 0; t < d.nt; ++t)
    for (std::size_t y = 0; y < d.ny; ++y)
      for (std::size_t x = 0; x < d.nx; ++x) {
        const double e = std::norm(spectrum.at(x, y, t));
        total += e;
        if ((x + t) % d.nx == 0) on += e;
      }
  CHECK(on / total >= 1.0 - 1e-12);
}

TEST_CASE("benchmark spectrum slope is -v_r", "[synth]") {
  GaussianSceneSpec s;
  const auto spectrum = forward_fft3(generate(s));
  const GridDims d = spectrum.dims;
  // Power-weighted omega centroid of each low-|kx| slice, then a slope fit through the origin.
  double num = 0.0, den = 0.0;
  for (std::size_t x = 1; x < d.nx; ++x) {
    const double kx = dft_frequency(x, d.nx);
    if (std::abs(kx) > 0.8) continue;
    double p = 0.0, pw = 0.0;
    for (std::size_t t = 0; t < d.nt; ++t)
      for (std::size_t y = 0; y < d.ny; ++y) {
        const double e = std::norm(spectrum.at(x, y, t));
        p += e;
        pw += e * dft_frequency(t, d.nt);
      }
    const double centroid = pw / p;
    num += p * kx * centroid;
    den += p * kx * kx;
  }
  const double slope = num / den;
  CHECK(std::abs(slope + 3.0) <= 0.05 * 3.0);
}

TEST_CASE("noise is seeded, unbiased and has the requested variance", "[synth]") {
  const auto base = SequenceVolume::zeros({64, 64, 16});
  const double sigma = 0.3;
  const auto a = add_noise(base, sigma, 17);
  const auto b = add_noise(base, sigma, 17);
  const auto c = add_noise(base, sigma, 18);
  CHECK(std::equal(a.data().begin(), a.data().end(), b.data().begin()));
  CHECK_FALSE(std::equal(a.data().begin(), a.data().end(), c.data().begin()));
  const double n = static_cast<double>(a.data().size());
  const double mean = std::accumulate(a.data().begin(), a.data().end(), 0.0) / n;
  double var = 0.0;
  for (double v : a.data()) var += (v - mean) * (v - mean);
  var /= n - 1.0;
  CHECK(std::abs(mean) <= 5.0 * sigma / std::sqrt(n));
  CHECK(std::abs(var - sigma * sigma) <= 0.05 * sigma * sigma);

  GaussianSceneSpec s;
  const auto clean = generate(s);
  const auto same = add_noise(clean, 0.0, 1);
  CHECK(std::equal(same.data().begin(), same.data().end(), clean.data().begin()));
  CHECK_THROWS_AS(add_noise(clean, -1.0, 1), std::invalid_argument);
}

TEST_CASE("SNR helper", "[synth]") {
  GaussianSceneSpec s;
  const auto clean = generate(s);
  const double p = mean_power(clean);
  CHECK(noise_sigma_for_snr(clean, 10.0) == Catch::Approx(std::sqrt(p / 10.0)).epsilon(1e-14));
  CHECK(noise_sigma_for_snr(clean, 0.0) == Catch::Approx(std::sqrt(p)).epsilon(1e-14));
}

TEST_CASE("generation is deterministic including noise", "[synth]") {
  GaussianSceneSpec s;
  s.noise_sigma = 0.1;
  s.seed = 99;
  const auto a = generate(s);
  const auto b = generate(s);
  CHECK(std::equal(a.data().begin(), a.data().end(), b.data().begin()));
}
