#include "gcm/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gcm {
namespace {

double ipow(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

// Coordinates of k in the cone's own frame (axis along +kx).
Vec2 to_cone_frame(Vec2 k, double axis) { return rotate(k, -axis); }

// Dual-cone projections in the cone frame: (k.e_{+a~}, k.e_{-a~}).
struct DualProjections {
  double plus;
  double minus;
};

DualProjections dual_projections(Vec2 local, double alpha) {
  // e_{+-a~} = (cos a~, +-sin a~) = (sin alpha, +-cos alpha)
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  return {local.x * s + local.y * c, local.x * s - local.y * c};
}

// GC conical * radial product for an already scaled, cone-frame wave-vector.
// Exactly zero outside the cone.
double gc_local(Vec2 local, const GcmParams& params) {
  const auto d = dual_projections(local, params.cone.alpha);
  if (d.plus < 0.0 || d.minus < 0.0) return 0.0;
  const double shifted = local.x - params.chi();
  return ipow(d.minus, params.l) * ipow(d.plus, params.m) *
         std::exp(-0.5 * params.sigma * shifted * shifted);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void ConeSpec::validate() const {
  require(std::isfinite(alpha) && alpha > 0.0 && alpha < kPi / 2.0,
          "cone half-aperture must lie in (0, pi/2)");
  require(std::isfinite(theta_axis), "cone axis must be finite");
}

Vec2 ConeSpec::edge(int sign) const {
  return unit(theta_axis + (sign >= 0 ? alpha : -alpha));
}

Vec2 ConeSpec::dual_edge(int sign) const {
  const double dual = kPi / 2.0 - alpha;
  return unit(theta_axis + (sign >= 0 ? dual : -dual));
}

bool ConeSpec::contains(Vec2 k) const {
  const auto d = dual_projections(to_cone_frame(k, theta_axis), alpha);
  return d.plus >= 0.0 && d.minus >= 0.0;
}

void GcmParams::validate() const {
  require(l >= 1 && m >= 1, "GCM exponents l and m must be >= 1");
  require(std::isfinite(sigma) && sigma > 0.0, "GCM sigma must be > 0");
  if (omega0) require(std::isfinite(*omega0), "omega0 must be finite");
  cone.validate();
}

double GcmParams::chi() const {
  return std::sqrt(static_cast<double>(l + m)) * (sigma - 1.0) / sigma;
}

double GcmParams::center_radius() const { return std::sqrt(static_cast<double>(l + m)); }

double GcmParams::temporal_center() const { return omega0.value_or(center_radius()); }

void MorletParams::validate() const {
  require(std::isfinite(k0.x) && std::isfinite(k0.y), "Morlet k0 must be finite");
  require(std::isfinite(epsilon) && epsilon >= 1.0, "Morlet epsilon must be >= 1");
}

void GroupElement::validate() const {
  require(a_s > 0.0 && std::isfinite(a_s), "spatial scale a_s must be > 0");
  require(a_t > 0.0 && std::isfinite(a_t), "temporal scale a_t must be > 0");
  require(c > 0.0 && std::isfinite(c), "speed tuning c must be > 0");
  require(std::isfinite(theta) && std::isfinite(tau) && std::isfinite(b.x) &&
              std::isfinite(b.y),
          "group parameters must be finite");
}

double eval_cauchy_1d(double omega, int m) {
  if (omega < 0.0) return 0.0;
  return ipow(omega, m) * std::exp(-omega);
}

double eval_morlet_2d(Vec2 k, const MorletParams& params, bool with_correction) {
  // |A^-1 v|^2 with A^-1 = diag[1, sqrt(eps)]
  auto quad = [&](Vec2 v) { return v.x * v.x + params.epsilon * v.y * v.y; };
  const double amp = std::sqrt(params.epsilon);
  double value = std::exp(-0.5 * quad(k - params.k0));
  if (with_correction) value -= std::exp(-0.5 * quad(params.k0)) * std::exp(-0.5 * quad(k));
  return amp * value;
}

double eval_cauchy_2d(Vec2 k, const ConeSpec& cone, int l, int m, Vec2 eta) {
  cone.validate();
  const auto eta_local = dual_projections(to_cone_frame(eta, cone.theta_axis), cone.alpha);
  if (!(eta_local.plus > 0.0 && eta_local.minus > 0.0))
    throw std::invalid_argument("Cauchy decay vector eta must lie strictly inside the cone");
  const auto d = dual_projections(to_cone_frame(k, cone.theta_axis), cone.alpha);
  if (d.plus < 0.0 || d.minus < 0.0) return 0.0;
  return ipow(d.plus, l) * ipow(d.minus, m) * std::exp(-dot(k, eta));
}

double eval_gc_2d(Vec2 k, const GcmParams& params) {
  return gc_local(to_cone_frame(k, params.cone.theta_axis), params);
}

GcEvaluator::GcEvaluator(const GcmParams& params)
    : params_(params),
      chi_(params.chi()),
      cos_axis_(std::cos(params.cone.theta_axis)),
      sin_axis_(std::sin(params.cone.theta_axis)),
      sin_alpha_(std::sin(params.cone.alpha)),
      cos_alpha_(std::cos(params.cone.alpha)) {
  params.validate();
}

double GcEvaluator::operator()(Vec2 k) const {
  const double x = cos_axis_ * k.x + sin_axis_ * k.y;
  const double y = -sin_axis_ * k.x + cos_axis_ * k.y;
  const double plus = x * sin_alpha_ + y * cos_alpha_;
  const double minus = x * sin_alpha_ - y * cos_alpha_;
  if (plus < 0.0 || minus < 0.0) return 0.0;
  const double shifted = x - chi_;
  return ipow(minus, params_.l) * ipow(plus, params_.m) *
         std::exp(-0.5 * params_.sigma * shifted * shifted);
}

double eval_morlet_1d(double omega, double omega0) {
  const double d = omega - omega0;
  return std::exp(-0.5 * d * d);
}

double eval_gcm(Vec2 k, double omega, const GcmParams& params) {
  const double spatial = eval_gc_2d(k, params);
  if (spatial == 0.0) return 0.0;
  return spatial * eval_morlet_1d(omega, params.temporal_center());
}

double tuned_spatial_factor(const GroupElement& g, const GcmParams& params, Vec2 k,
                            bool centered) {
  if (centered) k = k + central_wavevector(g, params);
  const double scale = std::pow(g.c, kSpeedExponentQ) * g.a_s;
  const Vec2 local = to_cone_frame(k, g.theta + params.cone.theta_axis) * scale;
  const double v = gc_local(local, params);
  return v == 0.0 ? 0.0 : v / g.a_s;
}

double tuned_temporal_factor(const GroupElement& g, const GcmParams& params, double omega,
                             bool centered) {
  const double stretched = std::pow(g.c, -kSpeedExponentP) * g.a_t * omega;
  const double d = centered ? stretched : stretched - params.temporal_center();
  return std::exp(-0.5 * d * d) / std::sqrt(g.a_t);
}

namespace {

std::complex<double> assemble(const GroupElement& g, const GcmParams& params, Vec2 k,
                              double omega, bool centered) {
  g.validate();
  const double spatial = tuned_spatial_factor(g, params, k, centered);
  if (spatial == 0.0) return {0.0, 0.0};
  const double magnitude = spatial * tuned_temporal_factor(g, params, omega, centered);
  const double phase = -(dot(k, g.b) + omega * g.tau);
  if (phase == 0.0) return {magnitude, 0.0};
  return std::polar(magnitude, phase);
}

}  // namespace

std::complex<double> apply_group(const GroupElement& g, const GcmParams& params, Vec2 k,
                                 double omega) {
  return assemble(g, params, k, omega, false);
}

Vec2 central_wavevector(const GroupElement& g, const GcmParams& params) {
  const double radius =
      params.center_radius() / (g.a_s * g.a_t * std::pow(g.c, kSpeedExponentQ));
  return unit(g.theta + params.cone.theta_axis) * radius;
}

double central_temporal_frequency(const GroupElement& g, const GcmParams& params) {
  return params.temporal_center() * std::pow(g.c, kSpeedExponentP) / g.a_t;
}

std::complex<double> eval_centered_gcm(const GroupElement& g, const GcmParams& params, Vec2 k,
                                       double omega) {
  return assemble(g, params, k, omega, true);
}

double arp_morlet(const MorletParams& params) {
  // 2 acot(x) = 2 atan(1/x) for x > 0
  return 2.0 * std::atan(1.0 / (norm(params.k0) * std::sqrt(params.epsilon)));
}

double arp_conical(const ConeSpec& cone) { return 2.0 * cone.alpha; }

}  // namespace gcm
