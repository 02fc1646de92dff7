#include "gcm/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace gcm {
namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

struct Fft3::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

Fft3::Fft3(GridDims dims) : dims_(dims), plans_(std::make_unique<Plans>()) {
  if (dims.size() == 0) throw std::invalid_argument("FFT grid must be non-empty");
  // FFTW_ESTIMATE keeps plans (and therefore results) deterministic run to run.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::vector<std::complex<double>> a(dims.size()), b(dims.size());
  const int n0 = static_cast<int>(dims.nt);
  const int n1 = static_cast<int>(dims.ny);
  const int n2 = static_cast<int>(dims.nx);
  std::lock_guard lock(planner_mutex());
  plans_->forward = fftw_plan_dft_3d(n0, n1, n2, as_fftw(a.data()), as_fftw(b.data()),
                                     FFTW_FORWARD, flags);
  plans_->backward = fftw_plan_dft_3d(n0, n1, n2, as_fftw(a.data()), as_fftw(b.data()),
                                      FFTW_BACKWARD, flags);
  if (!plans_->forward || !plans_->backward) throw std::runtime_error("FFTW planning failed");
}

Fft3::~Fft3() {
  std::lock_guard lock(planner_mutex());
  if (plans_->forward) fftw_destroy_plan(plans_->forward);
  if (plans_->backward) fftw_destroy_plan(plans_->backward);
}

namespace {

void run(fftw_plan plan, std::span<const std::complex<double>> in,
         std::span<std::complex<double>> out, std::size_t n) {
  if (in.size() != n || out.size() != n) throw std::invalid_argument("FFT buffer size mismatch");
  if (in.data() == out.data()) throw std::invalid_argument("FFT requires distinct buffers");
  // Out-of-place complex plans do not touch the input.
  fftw_execute_dft(plan, as_fftw(const_cast<std::complex<double>*>(in.data())),
                   as_fftw(out.data()));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& v : out) v *= scale;
}

}  // namespace

void Fft3::forward(std::span<const std::complex<double>> in,
                   std::span<std::complex<double>> out) const {
  run(plans_->forward, in, out, dims_.size());
  ++forward_count_;
}

void Fft3::inverse(std::span<const std::complex<double>> in,
                   std::span<std::complex<double>> out) const {
  run(plans_->backward, in, out, dims_.size());
  ++inverse_count_;
}

}  // namespace gcm
