#include "gcm/volume.hpp"

#include <cmath>
#include <stdexcept>

#include "gcm/geometry.hpp"

namespace gcm {

double dft_frequency(std::size_t i, std::size_t n) {
  return 2.0 * kPi * static_cast<double>(signed_bin(i, n)) / static_cast<double>(n);
}

void validate_sequence(GridDims dims, std::span<const double> data) {
  if (dims.nx < 2 || dims.ny < 2 || dims.nt < 2)
    throw std::invalid_argument("sequence dimensions must all be >= 2");
  if (data.size() != dims.size())
    throw std::invalid_argument("sequence data length does not match nx*ny*nt");
  for (double v : data)
    if (!std::isfinite(v)) throw std::invalid_argument("sequence contains non-finite samples");
}

SequenceVolume::SequenceVolume(GridDims dims, std::vector<double> data)
    : dims_(dims), data_(std::move(data)) {
  validate_sequence(dims_, data_);
}

SequenceVolume SequenceVolume::zeros(GridDims dims) {
  return SequenceVolume(dims, std::vector<double>(dims.size(), 0.0));
}

std::span<const double> SequenceVolume::frame(std::size_t t) const {
  if (t >= dims_.nt) throw std::out_of_range("frame index out of range");
  return std::span<const double>(data_).subspan(t * dims_.frame_size(), dims_.frame_size());
}

}  // namespace gcm
