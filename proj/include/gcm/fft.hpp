#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>

#include "gcm/volume.hpp"

namespace gcm {

/// Unitary 3D complex DFT on a fixed grid (1/sqrt(N) in both directions),
/// backed by FFTW. Plans are created once; execute() is thread-safe so a
/// single instance can be shared by concurrent workers.
///
/// forward:  X[k] = N^-1/2 sum_x x[n] exp(-i k.n)
/// inverse:  x[n] = N^-1/2 sum_k X[k] exp(+i k.n)
class Fft3 {
 public:
  explicit Fft3(GridDims dims);
  ~Fft3();
  Fft3(const Fft3&) = delete;
  Fft3& operator=(const Fft3&) = delete;

  const GridDims& dims() const { return dims_; }

  void forward(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;
  void inverse(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;

  // Instrumentation: number of executed transforms.
  std::uint64_t forward_count() const { return forward_count_.load(); }
  std::uint64_t inverse_count() const { return inverse_count_.load(); }

 private:
  struct Plans;
  GridDims dims_;
  std::unique_ptr<Plans> plans_;
  mutable std::atomic<std::uint64_t> forward_count_{0};
  mutable std::atomic<std::uint64_t> inverse_count_{0};
};

}  // namespace gcm
