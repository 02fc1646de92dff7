#include "gcm/stcwt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gcm {
namespace {

std::vector<std::complex<double>> to_complex(std::span<const double> data) {
  return {data.begin(), data.end()};
}

void require_untranslated(const GroupElement& g) {
  if (g.b.x != 0.0 || g.b.y != 0.0 || g.tau != 0.0)
    throw std::invalid_argument(
        "tuned filter must not carry a translation; b and tau come from the inverse FFT");
}

// Indices of non-zero spatial samples; the conical support makes most of the
// plane exactly zero.
std::vector<std::size_t> support_of(const std::vector<double>& spatial) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < spatial.size(); ++i)
    if (spatial[i] != 0.0) idx.push_back(i);
  return idx;
}

bool covers_all_frames(const std::vector<std::size_t>& frames, std::size_t nt) {
  if (frames.size() != nt) return false;
  std::vector<std::size_t> sorted = frames;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t t = 0; t < nt; ++t)
    if (sorted[t] != t) return false;
  return true;
}

}  // namespace

SpectrumVolume forward_fft3(const SequenceVolume& seq) {
  validate_sequence(seq.dims(), seq.data());
  Fft3 fft(seq.dims());
  SpectrumVolume out{seq.dims(), std::vector<std::complex<double>>(seq.dims().size())};
  fft.forward(to_complex(seq.data()), out.values);
  return out;
}

std::vector<std::complex<double>> inverse_fft3(const SpectrumVolume& spectrum) {
  Fft3 fft(spectrum.dims);
  std::vector<std::complex<double>> out(spectrum.dims.size());
  fft.inverse(spectrum.values, out);
  return out;
}

std::vector<std::complex<double>> SampledFilter::dense() const {
  std::vector<std::complex<double>> out(dims.size());
  for (std::size_t t = 0; t < dims.nt; ++t)
    for (std::size_t y = 0; y < dims.ny; ++y)
      for (std::size_t x = 0; x < dims.nx; ++x) out[dims.index(x, y, t)] = at(x, y, t);
  return out;
}

SampledFilter sample_tuned_filter(GridDims dims, const GroupElement& g, const GcmParams& params,
                                  bool centered) {
  g.validate();
  params.validate();
  require_untranslated(g);
  SampledFilter f{dims, std::vector<double>(dims.frame_size()), std::vector<double>(dims.nt)};
  for (std::size_t y = 0; y < dims.ny; ++y) {
    const double ky = dft_frequency(y, dims.ny);
    for (std::size_t x = 0; x < dims.nx; ++x) {
      const Vec2 k{dft_frequency(x, dims.nx), ky};
      f.spatial[x + dims.nx * y] = tuned_spatial_factor(g, params, k, centered);
    }
  }
  for (std::size_t t = 0; t < dims.nt; ++t)
    f.temporal[t] = tuned_temporal_factor(g, params, -dft_frequency(t, dims.nt), centered);
  return f;
}

WaveletCoefficients apply_filter(const SpectrumVolume& spectrum,
                                 std::span<const std::complex<double>> filter,
                                 const GroupElement& tuning) {
  if (filter.size() != spectrum.values.size())
    throw std::invalid_argument("filter grid does not match the spectrum grid");
  std::vector<std::complex<double>> product(filter.size());
  for (std::size_t i = 0; i < filter.size(); ++i)
    product[i] = std::conj(filter[i]) * spectrum.values[i];
  WaveletCoefficients out{spectrum.dims, std::vector<std::complex<double>>(filter.size()), tuning};
  Fft3 fft(spectrum.dims);
  fft.inverse(product, out.values);
  return out;
}

WaveletCoefficients apply_tuned_filter(const SpectrumVolume& spectrum, const GroupElement& g,
                                       const GcmParams& params, bool centered) {
  const auto filter = sample_tuned_filter(spectrum.dims, g, params, centered).dense();
  return apply_filter(spectrum, filter, g);
}

double energy_density(const WaveletCoefficients& coeffs, std::span<const std::size_t> frames) {
  if (frames.empty()) throw std::invalid_argument("frame selection must not be empty");
  std::vector<bool> seen(coeffs.dims.nt, false);
  for (std::size_t t : frames) {
    if (t >= coeffs.dims.nt) throw std::invalid_argument("frame index out of range");
    if (seen[t]) throw std::invalid_argument("frame selection contains duplicates");
    seen[t] = true;
  }
  const std::size_t frame = coeffs.dims.frame_size();
  double total = 0.0;
  for (std::size_t t : frames) {
    const auto* w = coeffs.values.data() + t * frame;
    for (std::size_t i = 0; i < frame; ++i) total += std::norm(w[i]);
  }
  return total;
}

NyquistLeakage nyquist_leakage(const SampledFilter& filter) {
  const GridDims& d = filter.dims;
  double smax = 0.0, sshell = 0.0;
  for (std::size_t y = 0; y < d.ny; ++y)
    for (std::size_t x = 0; x < d.nx; ++x) {
      const double v = std::abs(filter.spatial[x + d.nx * y]);
      smax = std::max(smax, v);
      if (x == d.nx / 2 || y == d.ny / 2) sshell = std::max(sshell, v);
    }
  double tmax = 0.0;
  for (double v : filter.temporal) tmax = std::max(tmax, std::abs(v));
  const double tshell = std::abs(filter.temporal[d.nt / 2]);
  NyquistLeakage out;
  if (smax > 0.0) out.spatial = sshell / smax;
  if (tmax > 0.0) out.temporal = tshell / tmax;
  return out;
}

SpectralEngine::SpectralEngine(const SequenceVolume& seq)
    : fft_(std::make_unique<Fft3>(seq.dims())) {
  validate_sequence(seq.dims(), seq.data());
  spectrum_.dims = seq.dims();
  spectrum_.values.resize(seq.dims().size());
  fft_->forward(to_complex(seq.data()), spectrum_.values);
}

WaveletCoefficients SpectralEngine::transform(const GroupElement& g, const GcmParams& params,
                                              bool centered) const {
  const auto filter = sample_tuned_filter(dims(), g, params, centered).dense();
  std::vector<std::complex<double>> product(filter.size());
  for (std::size_t i = 0; i < filter.size(); ++i)
    product[i] = std::conj(filter[i]) * spectrum_.values[i];
  WaveletCoefficients out{dims(), std::vector<std::complex<double>>(filter.size()), g};
  fft_->inverse(product, out.values);
  return out;
}

double SpectralEngine::energy(const GroupElement& g, const GcmParams& params,
                              const std::optional<std::vector<std::size_t>>& frames,
                              bool centered) const {
  if (!frames || covers_all_frames(*frames, dims().nt))
    return energy_parseval(g, params, centered);
  return energy_inverse(g, params, frames, centered);
}

double SpectralEngine::energy_parseval(const GroupElement& g, const GcmParams& params,
                                       bool centered) const {
  const auto f = sample_tuned_filter(dims(), g, params, centered);
  const auto support = support_of(f.spatial);
  const std::size_t frame = dims().frame_size();
  double total = 0.0;
  for (std::size_t t = 0; t < dims().nt; ++t) {
    const double tw = f.temporal[t] * f.temporal[t];
    if (tw == 0.0) continue;
    const auto* s = spectrum_.values.data() + t * frame;
    double plane = 0.0;
    for (std::size_t i : support) plane += f.spatial[i] * f.spatial[i] * std::norm(s[i]);
    total += tw * plane;
  }
  return total;
}

double SpectralEngine::energy_inverse(const GroupElement& g, const GcmParams& params,
                                      const std::optional<std::vector<std::size_t>>& frames,
                                      bool centered) const {
  const auto coeffs = transform(g, params, centered);
  if (frames) return energy_density(coeffs, *frames);
  std::vector<std::size_t> all(dims().nt);
  for (std::size_t t = 0; t < all.size(); ++t) all[t] = t;
  return energy_density(coeffs, all);
}

double SpectralEngine::moving_energy_fraction() const {
  const std::size_t frame = dims().frame_size();
  double still = 0.0, moving = 0.0;
  for (std::size_t i = 0; i < spectrum_.values.size(); ++i)
    (i < frame ? still : moving) += std::norm(spectrum_.values[i]);
  const double total = still + moving;
  if (total == 0.0) return 0.0;
  return moving / total;
}

}  // namespace gcm
