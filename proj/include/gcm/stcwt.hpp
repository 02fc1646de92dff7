#pragma once

// Discrete 2D+T wavelet transform: unitary 3D FFT of a sequence, pointwise
// product with a tuned GCM sampled on the DFT grid, inverse FFT over (b, tau)
// and energy densities.
//
// Conventions
//  * Unitary DFT in both directions, so sum |s|^2 == sum |s^|^2 and the
//    energy of a filtered sequence equals sum |psi^|^2 |s^|^2.
//  * Periodic boundaries: filtering is circular correlation.
//  * Tuned filters are sampled in the wave convention for time: DFT bin
//    (kx, ky, w) is given the filter value at (kx, ky, -w). A GCM tuned to
//    speed c and orientation theta then sits on the spectral plane of a
//    pattern moving with velocity c (cos theta, sin theta).
//  * W(b, tau) = IDFT[conj(psi^) s^], i.e. the correlation of s with the
//    discretized wavelet; shifting s shifts W by the same amount.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gcm/fft.hpp"
#include "gcm/kernels.hpp"
#include "gcm/volume.hpp"

namespace gcm {

/// Unitary forward 3D DFT. Throws on non-finite samples.
SpectrumVolume forward_fft3(const SequenceVolume& seq);

/// Unitary inverse 3D DFT.
std::vector<std::complex<double>> inverse_fft3(const SpectrumVolume& spectrum);

struct WaveletCoefficients {
  GridDims dims;
  std::vector<std::complex<double>> values;  ///< W(b, tau), x-fastest
  GroupElement tuning;
};

/// Tuned filter sampled on a DFT grid in separable form:
/// value(x, y, t) = spatial[x + nx*y] * temporal[t].
struct SampledFilter {
  GridDims dims;
  std::vector<double> spatial;
  std::vector<double> temporal;

  double at(std::size_t x, std::size_t y, std::size_t t) const {
    return spatial[x + dims.nx * y] * temporal[t];
  }
  /// Dense complex volume (the tuned filter is real when b = 0 and tau = 0).
  std::vector<std::complex<double>> dense() const;
};

/// Samples the tuned GCM (or its centered variant) on the DFT grid of `dims`.
/// g must have zero translation; translations come from the inverse FFT.
SampledFilter sample_tuned_filter(GridDims dims, const GroupElement& g, const GcmParams& params,
                                  bool centered = false);

/// Multiplies by conj(filter) and inverse-transforms. `filter` holds psi^ on
/// the DFT grid of `spectrum` in storage order.
WaveletCoefficients apply_filter(const SpectrumVolume& spectrum,
                                 std::span<const std::complex<double>> filter,
                                 const GroupElement& tuning = GroupElement::identity());

WaveletCoefficients apply_tuned_filter(const SpectrumVolume& spectrum, const GroupElement& g,
                                       const GcmParams& params, bool centered = false);

/// Sum of |W|^2 over every pixel of the selected frames. Rejects an empty or
/// out-of-range selection.
double energy_density(const WaveletCoefficients& coeffs, std::span<const std::size_t> frames);

/// Largest |psi^| on the Nyquist shell of the spatial axes (kx or ky at -pi)
/// or of the temporal axis, relative to the largest |psi^| on the grid.
struct NyquistLeakage {
  double spatial = 0.0;
  double temporal = 0.0;
};
NyquistLeakage nyquist_leakage(const SampledFilter& filter);

/// Holds the spectrum of one sequence and applies any number of tuned filters
/// to it. The sequence FFT is computed once, in the constructor; all const
/// members are safe to call concurrently.
class SpectralEngine {
 public:
  explicit SpectralEngine(const SequenceVolume& seq);

  const GridDims& dims() const { return spectrum_.dims; }
  const SpectrumVolume& spectrum() const { return spectrum_; }

  WaveletCoefficients transform(const GroupElement& g, const GcmParams& params,
                                bool centered = false) const;

  /// E_tot for the tuned filter over `frames` (nullopt = all frames). Uses the
  /// Fourier-side shortcut whenever every frame is selected.
  double energy(const GroupElement& g, const GcmParams& params,
                const std::optional<std::vector<std::size_t>>& frames = std::nullopt,
                bool centered = false) const;

  /// sum |psi^|^2 |s^|^2, no inverse transform.
  double energy_parseval(const GroupElement& g, const GcmParams& params,
                         bool centered = false) const;

  /// Inverse FFT, then the direct per-pixel sum.
  double energy_inverse(const GroupElement& g, const GcmParams& params,
                        const std::optional<std::vector<std::size_t>>& frames = std::nullopt,
                        bool centered = false) const;

  std::uint64_t forward_fft_count() const { return fft_->forward_count(); }
  std::uint64_t inverse_fft_count() const { return fft_->inverse_count(); }

  /// Fraction of the spectral energy lying off the w = 0 plane.
  double moving_energy_fraction() const;

 private:
  std::unique_ptr<Fft3> fft_;
  SpectrumVolume spectrum_;
};

}  // namespace gcm
