#include <catch_amalgamated.hpp>

#include <cmath>

#include "gcm/speedscan.hpp"
#include "gcm/synth.hpp"
#include "support/oracles.hpp"

using namespace gcm;

namespace {

SequenceVolume benchmark(double v_r, double motion_angle = 0.0) {
  GaussianSceneSpec s;
  s.v_r = v_r;
  s.motion_angle = motion_angle;
  s.pattern_angle = motion_angle;
  return generate(s);
}

SequenceVolume mirrored_y(const SequenceVolume& s) {
  const GridDims d = s.dims();
  std::vector<double> out(d.size());
  for (std::size_t t = 0; t < d.nt; ++t)
    for (std::size_t y = 0; y < d.ny; ++y)
      for (std::size_t x = 0; x < d.nx; ++x) out[d.index(x, (d.ny - y) % d.ny, t)] = s.at(x, y, t);
  return SequenceVolume(d, std::move(out));
}

SequenceVolume scaled(const SequenceVolume& s, double gain) {
  std::vector<double> out(s.data().begin(), s.data().end());
  for (double& v : out) v *= gain;
  return SequenceVolume(s.dims(), std::move(out));
}

}  // namespace

TEST_CASE("speed grid and config validation", "[speedscan]") {
  ScanConfig c;
  CHECK(c.speed_grid().size() == 21);
  CHECK(c.speed_grid().front() == 1.0);
  CHECK(c.speed_grid().back() == 6.0);
  c.c_step = 10.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.c_min = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.c_max = 0.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.frames = std::vector<std::size_t>{};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.alpha = 2.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("golden-section search finds the maximum of a unimodal function", "[speedscan]") {
  const double x = golden_section_max([](double c) { return -(c - 2.345) * (c - 2.345); }, 1.0, 4.0, 1e-6);
  CHECK(x == Catch::Approx(2.345).margin(1e-6));
}

TEST_CASE("travelling Gaussian: peak at the true speed", "[speedscan]") {
  const auto seq = benchmark(3.0);
  ScanConfig cfg;
  const auto curve = scan_speeds(seq, cfg);
  REQUIRE(curve.samples.size() == 21);
  for (std::size_t j = 1; j < curve.samples.size(); ++j)
    REQUIRE(curve.samples[j].c > curve.samples[j - 1].c);
  for (const auto& s : curve.samples) REQUIRE(s.energy >= 0.0);
  CHECK(curve.v_m == 3.0);
  CHECK_FALSE(curve.no_motion);
  CHECK_FALSE(curve.refined);

  cfg.refine = Refine::golden_section;
  const auto refined = scan_speeds(seq, cfg);
  CHECK(refined.refined);
  CHECK(std::abs(refined.v_m - 3.0) <= 0.05);
  // Refinement consistency.
  CHECK(std::abs(refined.v_m - curve.v_m) <= cfg.c_step);
  CHECK(refined.peak_energy >= curve.peak_energy);
}

TEST_CASE("energies agree with the inverse-FFT path", "[speedscan][oracle]") {
  const auto seq = benchmark(3.0);
  const SpectralEngine engine(seq);
  ScanConfig cfg;
  const auto curve = scan_speeds(engine, cfg);
  for (std::size_t j = 0; j < curve.samples.size(); j += 5) {
    const double slow = engine.energy_inverse(cfg.tuning(curve.samples[j].c), cfg.gcm_params());
    CHECK(std::abs(curve.samples[j].energy - slow) <= 1e-10 * slow);
  }
}

TEST_CASE("argmax is invariant under input scaling", "[speedscan][invariant]") {
  const auto seq = benchmark(3.0);
  ScanConfig cfg;
  cfg.c_step = 0.1;
  const auto base = scan_speeds(seq, cfg);
  for (double gain : {1e-3, 0.5, 7.25, 1e4}) {
    const auto curve = scan_speeds(scaled(seq, gain), cfg);
    CHECK(curve.v_m == base.v_m);
    CHECK(curve.grid_peak == base.grid_peak);
    for (std::size_t j = 0; j < curve.samples.size(); ++j)
      REQUIRE(curve.samples[j].energy == Catch::Approx(gain * gain * base.samples[j].energy).epsilon(1e-12));
  }
}

TEST_CASE("static and empty sequences are flagged as motionless", "[speedscan]") {
  GaussianSceneSpec s;
  s.v_r = 0.0;
  const auto still = generate(s);
  const auto curve = scan_speeds(still, ScanConfig{});
  CHECK(curve.no_motion);
  CHECK(SpectralEngine(still).moving_energy_fraction() < kFlatCurveThreshold);

  const auto zero = SequenceVolume::zeros({32, 32, 8});
  const auto flat = scan_speeds(zero, ScanConfig{});
  CHECK(flat.no_motion);
  CHECK(flat.peak_energy == 0.0);
  CHECK(flat.v_m == 1.0);  // ties go to the smallest c
}

TEST_CASE("scans are deterministic across worker counts", "[speedscan]") {
  const auto seq = benchmark(2.5);
  ScanConfig cfg;
  cfg.workers = 1;
  const auto a = scan_speeds(seq, cfg);
  cfg.workers = 4;
  const auto b = scan_speeds(seq, cfg);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t j = 0; j < a.samples.size(); ++j) REQUIRE(a.samples[j].energy == b.samples[j].energy);
  CHECK(a.v_m == b.v_m);
}

TEST_CASE("frame subsets use the inverse path and still find the speed", "[speedscan]") {
  const auto seq = benchmark(3.0);
  const SpectralEngine engine(seq);
  ScanConfig cfg;
  cfg.frames = std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7};
  const auto curve = scan_speeds(engine, cfg);
  CHECK(engine.inverse_fft_count() == curve.samples.size());
  CHECK(std::abs(curve.v_m - 3.0) <= cfg.c_step);
}

TEST_CASE("perpendicular orientation loses at least 10x of the peak energy", "[speedscan]") {
  const auto seq = benchmark(3.0);
  ScanConfig cfg;
  const auto aligned = scan_speeds(seq, cfg);
  cfg.theta = kPi / 2.0;
  const auto perpendicular = scan_speeds(seq, cfg);
  CHECK(aligned.peak_energy >= 10.0 * perpendicular.peak_energy);
}

TEST_CASE("orientation profile: selectivity and mirror symmetry", "[speedscan]") {
  const auto seq = benchmark(3.0);
  ScanConfig cfg;
  std::vector<double> thetas;
  for (int i = -8; i <= 8; ++i) thetas.push_back(i * kPi / 16.0);
  const auto profile = scan_orientations(seq, cfg, thetas);
  const auto& centre = profile[8];
  REQUIRE(centre.parameter == 0.0);
  CHECK(centre.v_m == 3.0);
  for (const auto& p : profile) CHECK(centre.peak_energy >= p.peak_energy);

  // Mirroring the sequence in y maps the profile theta -> -theta.
  const auto mirror = scan_orientations(mirrored_y(seq), cfg, thetas);
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const auto& a = profile[i];
    const auto& b = mirror[thetas.size() - 1 - i];
    INFO("theta=" << a.parameter);
    CHECK(std::abs(a.peak_energy - b.peak_energy) <= 1e-8 * std::max(a.peak_energy, 1e-300));
  }
}

TEST_CASE("aperture sweep at v_r = 4", "[speedscan]") {
  const auto seq = benchmark(4.0);
  ScanConfig cfg;
  const std::vector<double> alphas{kPi / 8.0, kPi / 16.0, kPi / 64.0, kPi / 256.0};
  const auto sweep = aperture_sweep(seq, cfg, alphas);
  for (const auto& p : sweep) {
    INFO("alpha=" << p.parameter);
    CHECK(std::abs(p.v_m - 4.0) <= cfg.c_step);
  }

  // Single-entry sweep reduces to scan_speeds.
  cfg.alpha = kPi / 64.0;
  const auto single = aperture_sweep(seq, cfg, {kPi / 64.0});
  const auto direct = scan_speeds(seq, cfg);
  CHECK(single[0].v_m == direct.v_m);
  CHECK(single[0].peak_energy == direct.peak_energy);

  // A narrow cone misaligned by pi/8 misses the spectrum.
  cfg.alpha = kPi / 256.0;
  const auto on = scan_speeds(seq, cfg);
  cfg.theta = kPi / 8.0;
  const auto off = scan_speeds(seq, cfg);
  CHECK(on.peak_energy >= 10.0 * off.peak_energy);

  CHECK_THROWS_AS(aperture_sweep(seq, ScanConfig{}, {0.0}), std::invalid_argument);
}

TEST_CASE("motion along other directions is found by rotating the wavelet", "[speedscan]") {
  const double angle = kPi / 4.0;
  const auto seq = benchmark(3.0, angle);
  ScanConfig cfg;
  cfg.theta = angle;
  CHECK(std::abs(scan_speeds(seq, cfg).v_m - 3.0) <= cfg.c_step);
}

TEST_CASE("noise robustness at 10 dB", "[speedscan][invariant]") {
  const auto clean = benchmark(3.0);
  const double sigma = noise_sigma_for_snr(clean, 10.0);
  ScanConfig cfg;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto noisy = add_noise(clean, sigma, seed);
    const auto curve = scan_speeds(noisy, cfg);
    INFO("seed=" << seed);
    CHECK(std::abs(curve.v_m - 3.0) <= 2.0 * cfg.c_step);
  }
}
