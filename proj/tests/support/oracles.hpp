#pragma once

// Independent reference implementations used as test oracles. Everything
// here is written as direct O(N^2) sums, with no FFT and no shared code with
// the library beyond the data types.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "gcm/frames.hpp"
#include "gcm/volume.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline gcm::SequenceVolume random_volume(gcm::GridDims dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> data(dims.size());
  for (double& v : data) v = u(rng);
  return gcm::SequenceVolume(dims, std::move(data));
}

/// Unitary DFT by the triple sum; sign -1 forward, +1 inverse.
inline std::vector<cplx> dft3(gcm::GridDims d, const std::vector<cplx>& in, int sign) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d.size()));
  std::vector<cplx> out(d.size());
  for (std::size_t kt = 0; kt < d.nt; ++kt)
    for (std::size_t ky = 0; ky < d.ny; ++ky)
      for (std::size_t kx = 0; kx < d.nx; ++kx) {
        cplx acc = 0.0;
        for (std::size_t t = 0; t < d.nt; ++t)
          for (std::size_t y = 0; y < d.ny; ++y)
            for (std::size_t x = 0; x < d.nx; ++x) {
              const double phase =
                  two_pi * (static_cast<double>((kx * x) % d.nx) / static_cast<double>(d.nx) +
                            static_cast<double>((ky * y) % d.ny) / static_cast<double>(d.ny) +
                            static_cast<double>((kt * t) % d.nt) / static_cast<double>(d.nt));
              acc += in[d.index(x, y, t)] * std::polar(1.0, sign * phase);
            }
        out[d.index(kx, ky, kt)] = acc * scale;
      }
  return out;
}

inline std::vector<cplx> to_complex(const gcm::SequenceVolume& s) {
  return {s.data().begin(), s.data().end()};
}

/// W(b, tau) = sum_n s(n) conj(h(n - b)), h(m) = N^-1 sum_k F(k) exp(+i k.m):
/// circular correlation with the discretized wavelet, in the direct domain.
inline std::vector<cplx> correlate(gcm::GridDims d, const std::vector<cplx>& s,
                                   const std::vector<cplx>& filter) {
  auto h = dft3(d, filter, +1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d.size()));
  for (auto& v : h) v *= scale;
  std::vector<cplx> out(d.size());
  for (std::size_t bt = 0; bt < d.nt; ++bt)
    for (std::size_t by = 0; by < d.ny; ++by)
      for (std::size_t bx = 0; bx < d.nx; ++bx) {
        cplx acc = 0.0;
        for (std::size_t t = 0; t < d.nt; ++t)
          for (std::size_t y = 0; y < d.ny; ++y)
            for (std::size_t x = 0; x < d.nx; ++x) {
              const std::size_t mx = (x + d.nx - bx) % d.nx;
              const std::size_t my = (y + d.ny - by) % d.ny;
              const std::size_t mt = (t + d.nt - bt) % d.nt;
              acc += s[d.index(x, y, t)] * std::conj(h[d.index(mx, my, mt)]);
            }
        out[d.index(bx, by, bt)] = acc;
      }
  return out;
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const std::vector<cplx>& a) {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

/// Lambda(k, w) as a plain triple loop with every factor recomputed.
inline double lambda_naive(gcm::Vec2 k, double w, const gcm::Discretization& disc,
                           const gcm::SeparableKernel& psi) {
  const auto rot = disc.rotation_range();
  double sum = 0.0;
  for (int l = disc.scale.lo; l <= disc.scale.hi; ++l)
    for (int n = disc.speed.lo; n <= disc.speed.hi; ++n)
      for (int q = rot.lo; q <= rot.hi; ++q) {
        const double angle = -q * std::numbers::pi / disc.q1;
        const double s = std::pow(disc.a0, l) * std::pow(disc.c0, n / 3.0);
        const double t = std::pow(disc.a0, l) * std::pow(disc.c0, -2.0 * n / 3.0);
        const gcm::Vec2 rk{std::cos(angle) * k.x - std::sin(angle) * k.y,
                           std::sin(angle) * k.x + std::cos(angle) * k.y};
        const double v = psi(rk * s, t * w);
        sum += v * v;
      }
  return sum;
}

/// sum_{l,n,q} |psi^(D k, E w)| |psi^(D (k - b), E (w - tau))|
inline double gamma_sum_naive(gcm::Vec2 k, double w, gcm::Vec2 b, double tau,
                              const gcm::Discretization& disc, const gcm::SeparableKernel& psi) {
  const auto rot = disc.rotation_range();
  double sum = 0.0;
  for (int l = disc.scale.lo; l <= disc.scale.hi; ++l)
    for (int n = disc.speed.lo; n <= disc.speed.hi; ++n)
      for (int q = rot.lo; q <= rot.hi; ++q) {
        const double angle = -q * std::numbers::pi / disc.q1;
        const double s = std::pow(disc.a0, l) * std::pow(disc.c0, n / 3.0);
        const double t = std::pow(disc.a0, l) * std::pow(disc.c0, -2.0 * n / 3.0);
        auto rot_by = [&](gcm::Vec2 v) {
          return gcm::Vec2{std::cos(angle) * v.x - std::sin(angle) * v.y,
                           std::sin(angle) * v.x + std::cos(angle) * v.y};
        };
        sum += std::abs(psi(rot_by(k) * s, t * w)) * std::abs(psi(rot_by(k - b) * s, t * (w - tau)));
      }
  return sum;
}

/// Cell centres of the log-polar search box used by the frame estimator.
struct BoxSample {
  gcm::Vec2 k;
  double w;
};
inline std::vector<BoxSample> box_centres(const gcm::Discretization& disc) {
  const std::size_t n = disc.grid;
  const double lr = std::log(disc.a0);
  const double th = std::numbers::pi / disc.q1;
  const double lw = std::log(disc.a0 * std::pow(disc.c0, 2.0 / 3.0));
  std::vector<BoxSample> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        const double r = std::exp((i + 0.5) / n * lr);
        const double phi = (j + 0.5) / n * th;
        out.push_back({{r * std::cos(phi), r * std::sin(phi)}, std::exp((m + 0.5) / n * lw)});
      }
  return out;
}

}  // namespace oracle
