#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gcm {

/// Grid of an (nx x ny x nt) volume stored x-fastest, then y, then t.
struct GridDims {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::size_t nt = 0;

  constexpr std::size_t size() const { return nx * ny * nt; }
  constexpr std::size_t frame_size() const { return nx * ny; }
  constexpr std::size_t index(std::size_t x, std::size_t y, std::size_t t) const {
    return x + nx * (y + ny * t);
  }
  constexpr bool operator==(const GridDims&) const = default;
};

/// Signed DFT index of bin i on an n-point axis, in [-n/2, n/2).
constexpr std::ptrdiff_t signed_bin(std::size_t i, std::size_t n) {
  return i < (n + 1) / 2 ? static_cast<std::ptrdiff_t>(i)
                         : static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(n);
}

/// Storage bin of a signed DFT index.
constexpr std::size_t storage_bin(std::ptrdiff_t s, std::size_t n) {
  const auto nn = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((s % nn) + nn) % nn);
}

/// Angular frequency 2 pi s / n (radians per sample) of storage bin i.
double dft_frequency(std::size_t i, std::size_t n);

/// Real image sequence. Every sample is finite and each axis has >= 2 points.
class SequenceVolume {
 public:
  SequenceVolume(GridDims dims, std::vector<double> data);
  static SequenceVolume zeros(GridDims dims);

  const GridDims& dims() const { return dims_; }
  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }
  std::span<const double> frame(std::size_t t) const;

  double at(std::size_t x, std::size_t y, std::size_t t) const { return data_[dims_.index(x, y, t)]; }
  double& at(std::size_t x, std::size_t y, std::size_t t) { return data_[dims_.index(x, y, t)]; }

  double pixel_pitch = 1.0;
  double frame_pitch = 1.0;

 private:
  GridDims dims_;
  std::vector<double> data_;
};

/// Throws std::invalid_argument unless dims are >= 2 on each axis, the data
/// length matches and all samples are finite.
void validate_sequence(GridDims dims, std::span<const double> data);

/// Complex 3D DFT of a sequence, stored in FFT order (bin 0 first) with the
/// same layout as SequenceVolume. Bin i on an axis of length n has frequency
/// dft_frequency(i, n).
struct SpectrumVolume {
  GridDims dims;
  std::vector<std::complex<double>> values;

  std::complex<double> at(std::size_t x, std::size_t y, std::size_t t) const {
    return values[dims.index(x, y, t)];
  }
  /// Access by signed (centered) frequency indices.
  std::complex<double> at_centered(std::ptrdiff_t kx, std::ptrdiff_t ky, std::ptrdiff_t w) const {
    return at(storage_bin(kx, dims.nx), storage_bin(ky, dims.ny), storage_bin(w, dims.nt));
  }
};

}  // namespace gcm
