#include "gcm/frames.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gcm/detail/golden_section.hpp"
#include "gcm/parallel.hpp"

namespace gcm {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Dilation factors of one (l, n) pair: spatial a0^l c0^(n/3), temporal a0^l c0^(-2n/3).
struct Dilation {
  double spatial;
  double temporal;
};

std::vector<Dilation> dilations(const Discretization& disc) {
  std::vector<Dilation> out;
  for (int l = disc.scale.lo; l <= disc.scale.hi; ++l)
    for (int n = disc.speed.lo; n <= disc.speed.hi; ++n) {
      const double a = std::pow(disc.a0, l);
      out.push_back({a * std::pow(disc.c0, n / 3.0), a * std::pow(disc.c0, -2.0 * n / 3.0)});
    }
  return out;
}

// Log-polar search box: log radius in [0, ln a0), angle in [0, theta0),
// log omega in [0, ln(a0 c0^(2/3))). Cell-centred samples.
struct SearchBox {
  std::size_t n;
  std::array<double, 3> extent;

  double center(int axis, double cell) const {
    return (cell + 0.5) / static_cast<double>(n) * extent[static_cast<std::size_t>(axis)];
  }
  double lo(int axis) const { return center(axis, 0.0); }
  double hi(int axis) const { return center(axis, static_cast<double>(n) - 1.0); }
  double cell(int axis) const { return extent[static_cast<std::size_t>(axis)] / static_cast<double>(n); }

  static Vec2 wavevector(double log_r, double phi) { return unit(phi) * std::exp(log_r); }
};

SearchBox search_box(const Discretization& disc) {
  return {disc.grid,
          {std::log(disc.a0), disc.theta0(), std::log(disc.a0 * std::pow(disc.c0, 2.0 / 3.0))}};
}

struct GridPoint {
  double log_r;
  double phi;
  double log_w;
};

double lambda_at(const GridPoint& p, const Discretization& disc, const SeparableKernel& kernel) {
  return lambda_fn(SearchBox::wavevector(p.log_r, p.phi), std::exp(p.log_w), disc, kernel).value;
}

// Coordinate-wise golden-section refinement around a grid extremum, within one
// cell and clamped to the sampled part of the box. sign = +1 maximizes, -1 minimizes.
GridPoint polish(GridPoint start, double start_value, int sign, const SearchBox& box,
                 const Discretization& disc, const SeparableKernel& kernel, double& value) {
  GridPoint best = start;
  value = start_value;
  for (int sweep = 0; sweep < 2; ++sweep)
    for (int axis = 0; axis < 3; ++axis) {
      double* coord = axis == 0 ? &best.log_r : axis == 1 ? &best.phi : &best.log_w;
      const double lo = std::max(box.lo(axis), *coord - box.cell(axis));
      const double hi = std::min(box.hi(axis), *coord + box.cell(axis));
      if (!(hi > lo)) continue;
      GridPoint trial = best;
      double* trial_coord = axis == 0 ? &trial.log_r : axis == 1 ? &trial.phi : &trial.log_w;
      auto f = [&](double x) {
        *trial_coord = x;
        return sign * lambda_at(trial, disc, kernel);
      };
      const double x = golden_section_max(f, lo, hi, box.cell(axis) * 1e-3);
      *trial_coord = x;
      const double v = lambda_at(trial, disc, kernel);
      if (sign * v > sign * value) {
        value = v;
        best = trial;
      }
    }
  return best;
}

double tail_ratio(double tail, double value) {
  if (tail == 0.0) return 0.0;
  if (value == 0.0) return std::numeric_limits<double>::infinity();
  return tail / value;
}

}  // namespace

void Discretization::validate() const {
  require(std::isfinite(a0) && a0 > 1.0, "a0 must be > 1");
  require(std::isfinite(c0) && c0 > 1.0, "c0 must be > 1");
  require(q1 >= 1, "q1 must be >= 1");
  require(scale.lo <= scale.hi && speed.lo <= speed.hi, "index ranges must be non-empty");
  if (rotation) require(rotation->lo <= rotation->hi, "rotation range must be non-empty");
  require(std::isfinite(bx0) && bx0 > 0.0 && std::isfinite(by0) && by0 > 0.0 &&
              std::isfinite(tau0) && tau0 > 0.0,
          "translation steps must be > 0");
  require(grid >= 2, "search grid needs at least 2 points per axis");
  require(lattice >= 0, "lattice extent must be >= 0");
}

IndexRange Discretization::rotation_range() const { return rotation.value_or(IndexRange{1 - q1, q1}); }

bool Discretization::full_turn() const { return !rotation.has_value(); }

SeparableKernel gcm_mother_kernel(const GcmParams& params) {
  const GcEvaluator spatial(params);
  const double omega0 = params.temporal_center();
  return {spatial, [omega0](double w) { return eval_morlet_1d(w, omega0); }, "gcm"};
}

SeparableKernel tight_frame_stub(const Discretization& disc) {
  disc.validate();
  const double a0 = disc.a0;
  const double theta0 = disc.theta0();
  const double w_hi = disc.a0 * std::pow(disc.c0, 2.0 / 3.0);
  auto spatial = [a0, theta0](Vec2 k) {
    const double r = norm(k);
    const double phi = std::atan2(k.y, k.x);
    return (r >= 1.0 && r < a0 && phi >= 0.0 && phi < theta0) ? 1.0 : 0.0;
  };
  auto temporal = [w_hi](double w) { return (w >= 1.0 && w < w_hi) ? 1.0 : 0.0; };
  return {spatial, temporal, "tight-frame-stub"};
}

LambdaValue lambda_fn(Vec2 k, double omega, const Discretization& disc,
                      const SeparableKernel& kernel) {
  disc.validate();
  const IndexRange rot = disc.rotation_range();
  const double theta0 = disc.theta0();
  auto term = [&](int l, int n, int q) {
    const double a = std::pow(disc.a0, l);
    const double t = kernel.temporal(a * std::pow(disc.c0, -2.0 * n / 3.0) * omega);
    if (t == 0.0) return 0.0;
    const double s = kernel.spatial(rotate(k, -q * theta0) * (a * std::pow(disc.c0, n / 3.0)));
    const double v = s * t;
    return v * v;
  };

  LambdaValue out;
  for (int l = disc.scale.lo; l <= disc.scale.hi; ++l)
    for (int n = disc.speed.lo; n <= disc.speed.hi; ++n)
      for (int q = rot.lo; q <= rot.hi; ++q) out.value += term(l, n, q);

  // Ring one step outside the truncation box. A full turn has no rotation tail.
  const int q_pad = disc.full_turn() ? 0 : 1;
  for (int l = disc.scale.lo - 1; l <= disc.scale.hi + 1; ++l)
    for (int n = disc.speed.lo - 1; n <= disc.speed.hi + 1; ++n)
      for (int q = rot.lo - q_pad; q <= rot.hi + q_pad; ++q) {
        if (disc.scale.contains(l) && disc.speed.contains(n) && rot.contains(q)) continue;
        out.tail = std::max(out.tail, term(l, n, q));
      }
  return out;
}

FrameBoundReport estimate_bounds(const Discretization& disc, const SeparableKernel& kernel) {
  disc.validate();
  const SearchBox box = search_box(disc);
  const std::size_t n = box.n;
  const std::size_t plane = n * n;
  const auto dil = dilations(disc);
  const IndexRange rot = disc.rotation_range();

  // Wave-vector of every (radius, angle) sample, pre-rotated for every q.
  const auto n_rot = static_cast<std::size_t>(rot.count());
  std::vector<Vec2> rotated(plane * n_rot);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2 k = SearchBox::wavevector(box.center(0, static_cast<double>(i)),
                                           box.center(1, static_cast<double>(j)));
      for (std::size_t q = 0; q < n_rot; ++q)
        rotated[(i * n + j) * n_rot + q] =
            rotate(k, -(rot.lo + static_cast<int>(q)) * disc.theta0());
    }
  std::vector<double> omegas(n);
  for (std::size_t w = 0; w < n; ++w) omegas[w] = std::exp(box.center(2, static_cast<double>(w)));

  // Spatial tables per dilation: sum_q |S(D r_q k)| |S(D r_q (k - b))|, and the
  // temporal counterpart |T(E w)| |T(E (w - tau))|. b = 0, tau = 0 gives Lambda.
  auto spatial_table = [&](Vec2 b) {
    std::vector<double> table(dil.size() * plane, 0.0);
    parallel_for(plane, [&](std::size_t ij) {
      for (std::size_t d = 0; d < dil.size(); ++d) {
        double sum = 0.0;
        for (std::size_t q = 0; q < n_rot; ++q) {
          const Vec2 k = rotated[ij * n_rot + q];
          const double s0 = std::abs(kernel.spatial(k * dil[d].spatial));
          if (s0 == 0.0) continue;
          const Vec2 rb = rotate(b, -(rot.lo + static_cast<int>(q)) * disc.theta0());
          sum += s0 * std::abs(kernel.spatial((k - rb) * dil[d].spatial));
        }
        table[d * plane + ij] = sum;
      }
    });
    return table;
  };
  auto temporal_table = [&](double tau) {
    std::vector<double> table(dil.size() * n, 0.0);
    for (std::size_t d = 0; d < dil.size(); ++d)
      for (std::size_t w = 0; w < n; ++w) {
        const double t0 = std::abs(kernel.temporal(dil[d].temporal * omegas[w]));
        if (t0 == 0.0) continue;
        table[d * n + w] = t0 * std::abs(kernel.temporal(dil[d].temporal * (omegas[w] - tau)));
      }
    return table;
  };
  // Combined value at every grid point, one slab of omegas per (r, angle) sample.
  auto combine = [&](const std::vector<double>& spatial, const std::vector<double>& temporal) {
    std::vector<double> out(plane * n, 0.0);
    parallel_for(plane, [&](std::size_t ij) {
      for (std::size_t d = 0; d < dil.size(); ++d) {
        const double s = spatial[d * plane + ij];
        if (s == 0.0) continue;
        for (std::size_t w = 0; w < n; ++w) out[ij * n + w] += s * temporal[d * n + w];
      }
    });
    return out;
  };

  FrameBoundReport report;
  report.kernel = kernel.name;

  const auto lambda_grid = combine(spatial_table({0.0, 0.0}), temporal_table(0.0));
  const auto [min_it, max_it] = std::minmax_element(lambda_grid.begin(), lambda_grid.end());
  auto grid_point = [&](std::size_t index) {
    const std::size_t w = index % n;
    const std::size_t ij = index / n;
    return GridPoint{box.center(0, static_cast<double>(ij / n)),
                     box.center(1, static_cast<double>(ij % n)),
                     box.center(2, static_cast<double>(w))};
  };
  GridPoint pmin = grid_point(static_cast<std::size_t>(min_it - lambda_grid.begin()));
  GridPoint pmax = grid_point(static_cast<std::size_t>(max_it - lambda_grid.begin()));
  report.lambda_minus = *min_it;
  report.lambda_plus = *max_it;
  if (disc.polish) {
    pmin = polish(pmin, report.lambda_minus, -1, box, disc, kernel, report.lambda_minus);
    pmax = polish(pmax, report.lambda_plus, +1, box, disc, kernel, report.lambda_plus);
  }
  report.argmin_k = SearchBox::wavevector(pmin.log_r, pmin.phi);
  report.argmin_omega = std::exp(pmin.log_w);
  report.argmax_k = SearchBox::wavevector(pmax.log_r, pmax.phi);
  report.argmax_omega = std::exp(pmax.log_w);
  const auto at_min = lambda_fn(report.argmin_k, report.argmin_omega, disc, kernel);
  const auto at_max = lambda_fn(report.argmax_k, report.argmax_omega, disc, kernel);
  report.lambda_tail = std::max(tail_ratio(at_min.tail, at_min.value),
                                tail_ratio(at_max.tail, at_max.value));

  // Gamma on the translation lattice, cached per distinct spatial / temporal shift.
  const int M = disc.lattice;
  const std::size_t side = static_cast<std::size_t>(2 * M + 1);
  std::vector<std::vector<double>> spatial_cache(side * side);
  std::vector<std::vector<double>> temporal_cache(side);
  auto spatial_for = [&](int mx, int my) -> const std::vector<double>& {
    auto& slot = spatial_cache[static_cast<std::size_t>(mx + M) * side +
                               static_cast<std::size_t>(my + M)];
    if (slot.empty())
      slot = spatial_table({2.0 * kPi * mx / disc.bx0, 2.0 * kPi * my / disc.by0});
    return slot;
  };
  auto temporal_for = [&](int p) -> const std::vector<double>& {
    auto& slot = temporal_cache[static_cast<std::size_t>(p + M)];
    if (slot.empty()) slot = temporal_table(2.0 * kPi * p / disc.tau0);
    return slot;
  };
  std::vector<double> big_gamma(side * side * side, 0.0);
  auto slot = [&](int mx, int my, int p) -> double& {
    return big_gamma[(static_cast<std::size_t>(mx + M) * side + static_cast<std::size_t>(my + M)) *
                         side +
                     static_cast<std::size_t>(p + M)];
  };
  for (int mx = -M; mx <= M; ++mx)
    for (int my = -M; my <= M; ++my)
      for (int p = -M; p <= M; ++p) {
        if (mx == 0 && my == 0 && p == 0) continue;
        const auto values = combine(spatial_for(mx, my), temporal_for(p));
        slot(mx, my, p) = *std::max_element(values.begin(), values.end());
      }
  for (int mx = -M; mx <= M; ++mx)
    for (int my = -M; my <= M; ++my)
      for (int p = -M; p <= M; ++p) {
        if (mx == 0 && my == 0 && p == 0) continue;
        const double term = std::sqrt(slot(mx, my, p) * slot(-mx, -my, -p));
        report.gamma += term;
        if (std::max({std::abs(mx), std::abs(my), std::abs(p)}) == M)
          report.gamma_tail = std::max(report.gamma_tail, term);
      }

  const double pref = std::pow(2.0 * kPi, 1.5) / (disc.bx0 * disc.by0 * disc.tau0);
  report.A = pref * (report.lambda_minus - report.gamma);
  report.B = pref * (report.lambda_plus + report.gamma);
  report.valid = report.A > 0.0;
  report.ratio = report.valid ? report.B / report.A : std::numeric_limits<double>::infinity();
  return report;
}

FrameBoundReport estimate_bounds(const Discretization& disc, const GcmParams& params) {
  return estimate_bounds(disc, gcm_mother_kernel(params));
}

}  // namespace gcm
