#include "gcm/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcm/cli/stv.hpp"
#include "gcm/cli/text.hpp"
#include "gcm/frames.hpp"
#include "gcm/kernels.hpp"
#include "gcm/speedscan.hpp"
#include "gcm/synth.hpp"

namespace gcm::cli {
namespace {

using nlohmann::json;

// "64x64x16" (or "65x65" for 2D grids, nt = 1).
GridDims parse_size(const std::string& text, bool allow_2d) {
  std::vector<std::size_t> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, 'x')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0) throw std::invalid_argument("bad size '" + text + "'");
    parts.push_back(v);
  }
  if (parts.size() == 2 && allow_2d) return {parts[0], parts[1], 1};
  if (parts.size() != 3) throw std::invalid_argument("size must be NXxNYxNT: '" + text + "'");
  return {parts[0], parts[1], parts[2]};
}

IndexRange parse_index_range(const std::string& text) {
  const auto colon = text.find(':', 1);
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad index range '" + text + "' (expected LO:HI)");
  }
}

StvType parse_dtype(const std::string& text) {
  if (text == "f32" || text == "float32") return StvType::float32;
  if (text == "f64" || text == "float64") return StvType::float64;
  throw std::invalid_argument("dtype must be f32 or f64");
}

// Writes to the file when a path is given, else to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw IoError("write failed: " + path);
}

json scene_json(const GaussianSceneSpec& s) {
  const Vec2 start = s.start_point();
  return {{"generator", "travelling-gaussian"},
          {"nx", s.nx},
          {"ny", s.ny},
          {"nt", s.nt},
          {"sigma_x", s.sigma_x},
          {"sigma_y", s.sigma_y},
          {"pattern_angle", s.pattern_angle},
          {"v_r", s.v_r},
          {"motion_angle", s.motion_angle},
          {"start", {start.x, start.y}},
          {"amplitude", s.amplitude},
          {"noise_sigma", s.noise_sigma},
          {"seed", s.seed},
          {"wrap", s.wrap}};
}

// ---- shared flag groups ---------------------------------------------------

struct KernelFlags {
  int l = 10;
  int m = 10;
  double sigma = 1.0;
  std::string alpha = "pi/16";
  std::optional<double> omega0;

  void add(CLI::App& app) {
    app.add_option("--l", l, "Vanishing-moment exponent l")->capture_default_str();
    app.add_option("--m", m, "Vanishing-moment exponent m")->capture_default_str();
    app.add_option("--sigma", sigma, "Radial Gaussian scale")->capture_default_str();
    app.add_option("--alpha", alpha, "Cone half-aperture (decimal or pi/N)")->capture_default_str();
    app.add_option("--omega0", omega0, "Temporal Morlet centre (default sqrt(l+m))");
  }
  GcmParams params(double axis = 0.0) const {
    GcmParams p;
    p.l = l;
    p.m = m;
    p.sigma = sigma;
    p.omega0 = omega0;
    p.cone = {parse_angle(alpha), axis};
    p.validate();
    return p;
  }
};

struct ScanFlags {
  std::string in;
  std::string out;
  double c_min = 1.0;
  double c_max = 6.0;
  double c_step = 0.25;
  std::string theta = "0";
  double a_s = 3.0;
  double a_t = 3.0;
  std::vector<std::size_t> frames;
  bool refine = false;
  double tolerance = 1e-3;
  unsigned workers = 0;
  KernelFlags kernel;

  void add(CLI::App& app) {
    app.add_option("--in", in, "Input STV sequence")->required();
    app.add_option("--out", out, "Output CSV (default stdout)");
    app.add_option("--c-min", c_min, "Smallest speed tuning (pixels/frame)")->capture_default_str();
    app.add_option("--c-max", c_max, "Largest speed tuning (pixels/frame)")->capture_default_str();
    app.add_option("--c-step", c_step, "Speed grid step")->capture_default_str();
    app.add_option("--theta", theta, "Wavelet orientation")->capture_default_str();
    app.add_option("--a-s", a_s, "Spatial scale")->capture_default_str();
    app.add_option("--a-t", a_t, "Temporal scale")->capture_default_str();
    app.add_option("--frames", frames, "Frames summed into the energy (default all)")->delimiter(',');
    app.add_flag("--refine", refine, "Golden-section refinement of the peak");
    app.add_option("--tolerance", tolerance, "Refinement tolerance")->capture_default_str();
    app.add_option("--workers", workers, "Worker threads, 0 = all cores")->capture_default_str();
    kernel.add(app);
  }
  ScanConfig config() const {
    ScanConfig c;
    c.c_min = c_min;
    c.c_max = c_max;
    c.c_step = c_step;
    c.theta = parse_angle(theta);
    c.a_s = a_s;
    c.a_t = a_t;
    c.alpha = parse_angle(kernel.alpha);
    c.l = kernel.l;
    c.m = kernel.m;
    c.sigma = kernel.sigma;
    c.omega0 = kernel.omega0;
    if (!frames.empty()) c.frames = frames;
    c.refine = refine ? Refine::golden_section : Refine::none;
    c.refine_tolerance = tolerance;
    c.workers = workers;
    c.validate();
    return c;
  }
};

// ---- synth ----------------------------------------------------------------

struct SynthCmd {
  std::string size = "64x64x16";
  double speed = 3.0;
  std::string motion_angle = "0";
  double sigma_x = 1.0;
  double sigma_y = 8.0;
  std::string pattern_angle = "0";
  double amplitude = 1.0;
  double noise = 0.0;
  std::optional<double> snr;
  std::uint64_t seed = 0;
  std::vector<double> start;
  bool no_wrap = false;
  std::string dtype = "f32";
  std::string out;

  void add(CLI::App& app) {
    app.add_option("--size", size, "Grid NXxNYxNT")->capture_default_str();
    app.add_option("--speed", speed, "Speed v_r (pixels/frame)")->capture_default_str();
    app.add_option("--motion-angle", motion_angle, "Trajectory direction")->capture_default_str();
    app.add_option("--sigma-x", sigma_x, "Gaussian width along its first axis")->capture_default_str();
    app.add_option("--sigma-y", sigma_y, "Gaussian width along its second axis")->capture_default_str();
    app.add_option("--pattern-angle", pattern_angle, "Orientation of the Gaussian")->capture_default_str();
    app.add_option("--amplitude", amplitude, "Peak value")->capture_default_str();
    auto* noise_opt = app.add_option("--noise", noise, "Additive white-noise std")->capture_default_str();
    app.add_option("--snr", snr, "Noise level as SNR in dB (noise power vs. mean signal power)")
        ->excludes(noise_opt);
    app.add_option("--seed", seed, "Noise seed")->capture_default_str();
    app.add_option("--start", start, "Frame-0 centre X,Y (default volume centre)")
        ->delimiter(',')
        ->expected(2);
    app.add_flag("--no-wrap", no_wrap, "Require the trajectory to stay inside the volume");
    app.add_option("--dtype", dtype, "Sample type f32 or f64")->capture_default_str();
    app.add_option("--out", out, "Output STV path")->required();
  }

  int run(std::ostream& out_stream) const {
    GaussianSceneSpec spec;
    const GridDims dims = parse_size(size, false);
    spec.nx = dims.nx;
    spec.ny = dims.ny;
    spec.nt = dims.nt;
    spec.v_r = speed;
    spec.motion_angle = parse_angle(motion_angle);
    spec.sigma_x = sigma_x;
    spec.sigma_y = sigma_y;
    spec.pattern_angle = parse_angle(pattern_angle);
    spec.amplitude = amplitude;
    spec.seed = seed;
    spec.wrap = !no_wrap;
    if (start.size() == 2) spec.start = Vec2{start[0], start[1]};
    const StvType type = parse_dtype(dtype);

    SequenceVolume seq = [&] {
      if (!snr) {
        spec.noise_sigma = noise;
        return generate(spec);
      }
      const SequenceVolume clean = generate(spec);
      spec.noise_sigma = noise_sigma_for_snr(clean, *snr);
      return add_noise(clean, spec.noise_sigma, spec.seed);
    }();

    write_stv(out, seq.dims(), seq.data(), type);
    json meta = scene_json(spec);
    if (snr) meta["snr_db"] = *snr;
    meta["dtype"] = type == StvType::float32 ? "float32" : "float64";
    write_sidecar(out, meta);
    out_stream << "wrote " << out << " (" << spec.nx << 'x' << spec.ny << 'x' << spec.nt << ' '
               << meta["dtype"].get<std::string>() << ", v_r=" << format_number(spec.v_r)
               << ", noise_sigma=" << format_number(spec.noise_sigma) << ")\n";
    return kExitOk;
  }
};

// ---- scan / orient-scan / aperture-sweep -----------------------------------

struct ScanCmd {
  ScanFlags flags;
  void add(CLI::App& app) { flags.add(app); }

  int run(std::ostream& out) const {
    const ScanConfig config = flags.config();
    const auto curve = scan_speeds(read_sequence(flags.in), config);
    std::string csv = "c,energy\n";
    for (const auto& s : curve.samples) csv += format_number(s.c) + ',' + format_number(s.energy) + '\n';
    csv += "# v_m=" + format_number(curve.v_m) + '\n';
    csv += "# peak_energy=" + format_number(curve.peak_energy) + '\n';
    if (curve.refined) csv += "# refined=1\n";
    if (curve.no_motion) csv += "# flat=1\n";
    emit(csv, flags.out, out);
    return curve.no_motion ? kExitFlat : kExitOk;
  }
};

struct SweepCmd {
  enum class Kind { orientation, aperture } kind;
  std::string list;
  ScanFlags flags;

  explicit SweepCmd(Kind k)
      : kind(k), list(k == Kind::orientation ? "-pi/2:pi/2:pi/32" : "pi/8,pi/16,pi/64,pi/256") {}

  void add(CLI::App& app) {
    flags.add(app);
    if (kind == Kind::orientation)
      app.add_option("--thetas", list, "Orientations: list or start:stop:step")->capture_default_str();
    else
      app.add_option("--alphas", list, "Apertures: list or start:stop:step")->capture_default_str();
  }

  int run(std::ostream& out) const {
    const ScanConfig config = flags.config();
    const auto values = parse_angle_list(list);
    if (values.empty()) throw std::invalid_argument("sweep list is empty");
    const auto seq = read_sequence(flags.in);
    const auto points = kind == Kind::orientation ? scan_orientations(seq, config, values)
                                                  : aperture_sweep(seq, config, values);
    const char* name = kind == Kind::orientation ? "theta" : "alpha";
    std::string csv = std::string(name) + ",v_m,peak_energy\n";
    std::size_t best = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& p = points[i];
      csv += format_number(p.parameter) + ',' + format_number(p.v_m) + ',' +
             format_number(p.peak_energy) + '\n';
      if (p.peak_energy > points[best].peak_energy) best = i;
    }
    csv += std::string("# argmax_") + name + '=' + format_number(points[best].parameter) + '\n';
    const auto flat = std::count_if(points.begin(), points.end(), [](const SweepPoint& p) { return p.no_motion; });
    if (flat > 0) csv += "# flat_rows=" + std::to_string(flat) + '\n';
    emit(csv, flags.out, out);
    return kExitOk;
  }
};

// ---- kernel -----------------------------------------------------------------

struct KernelCmd {
  std::string type;
  std::string grid = "65x65x33";
  double k_max = 8.0;
  double w_max = 8.0;
  std::string theta = "0";
  double a_s = 1.0;
  double a_t = 1.0;
  double c = 1.0;
  std::vector<double> b{0.0, 0.0};
  double tau = 0.0;
  double k0x = 6.0;
  double k0y = 0.0;
  double eps = 1.0;
  std::vector<double> eta;
  bool correction = false;
  std::string dtype = "f32";
  std::string out;
  KernelFlags kernel;

  void add(CLI::App& app) {
    app.add_option("--type", type, "gcm | gc2d | morlet2d | cauchy2d | centered-gcm")->required();
    app.add_option("--grid", grid, "Samples NKXxNKY[xNW]")->capture_default_str();
    app.add_option("--k-max", k_max, "kx, ky span [-k_max, k_max]")->capture_default_str();
    app.add_option("--w-max", w_max, "omega span [-w_max, w_max]")->capture_default_str();
    app.add_option("--theta", theta, "Rotation (group) or cone axis (2D kernels)")->capture_default_str();
    app.add_option("--a-s", a_s, "Spatial scale")->capture_default_str();
    app.add_option("--a-t", a_t, "Temporal scale")->capture_default_str();
    app.add_option("--c", c, "Speed tuning")->capture_default_str();
    app.add_option("--b", b, "Spatial translation BX,BY")->delimiter(',')->expected(2);
    app.add_option("--tau", tau, "Temporal translation")->capture_default_str();
    app.add_option("--k0x", k0x, "Morlet k0 x")->capture_default_str();
    app.add_option("--k0y", k0y, "Morlet k0 y")->capture_default_str();
    app.add_option("--eps", eps, "Morlet anisotropy")->capture_default_str();
    app.add_option("--eta", eta, "Cauchy decay vector EX,EY (default unit vector on the axis)")
        ->delimiter(',')
        ->expected(2);
    app.add_flag("--correction", correction, "Morlet admissibility correction term");
    app.add_option("--dtype", dtype, "Sample type f32 or f64")->capture_default_str();
    app.add_option("--out", out, "Output basename")->required();
    kernel.add(app);
  }

  int run(std::ostream& out_stream) const {
    static const std::vector<std::string> kTypes{"gcm", "gc2d", "morlet2d", "cauchy2d", "centered-gcm"};
    if (std::find(kTypes.begin(), kTypes.end(), type) == kTypes.end())
      throw std::invalid_argument("unknown kernel type '" + type + "'");
    const bool temporal = type == "gcm" || type == "centered-gcm";
    GridDims dims = parse_size(grid, true);
    if (!temporal) dims.nt = 1;
    if (!(k_max > 0.0 && w_max > 0.0)) throw std::invalid_argument("k_max and w_max must be > 0");
    const StvType out_type = parse_dtype(dtype);

    const double angle = parse_angle(theta);
    GroupElement g;
    g.b = {b[0], b[1]};
    g.tau = tau;
    g.theta = angle;
    g.a_s = a_s;
    g.a_t = a_t;
    g.c = c;
    if (temporal) g.validate();
    const GcmParams params = kernel.params(temporal ? 0.0 : angle);
    const MorletParams morlet{{k0x, k0y}, eps};
    morlet.validate();
    const Vec2 eta_vec = eta.size() == 2 ? Vec2{eta[0], eta[1]} : unit(angle);

    auto axis = [](std::size_t i, std::size_t n, double span) {
      return n == 1 ? 0.0 : -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    std::vector<double> re(dims.size()), im(dims.size());
    for (std::size_t t = 0; t < dims.nt; ++t)
      for (std::size_t y = 0; y < dims.ny; ++y)
        for (std::size_t x = 0; x < dims.nx; ++x) {
          const Vec2 k{axis(x, dims.nx, k_max), axis(y, dims.ny, k_max)};
          const double w = axis(t, dims.nt, w_max);
          std::complex<double> v;
          if (type == "gcm") v = apply_group(g, params, k, w);
          else if (type == "centered-gcm") v = eval_centered_gcm(g, params, k, w);
          else if (type == "gc2d") v = eval_gc_2d(k, params);
          else if (type == "morlet2d") v = eval_morlet_2d(k, morlet, correction);
          else v = eval_cauchy_2d(k, params.cone, params.l, params.m, eta_vec);
          re[dims.index(x, y, t)] = v.real();
          im[dims.index(x, y, t)] = v.imag();
        }

    const auto re_path = std::filesystem::path(out + "_re.stv");
    const auto im_path = std::filesystem::path(out + "_im.stv");
    write_stv(re_path, dims, re, out_type);
    write_stv(im_path, dims, im, out_type);
    json meta{{"type", type},
              {"grid", {dims.nx, dims.ny, dims.nt}},
              {"axes", {{"kx", {-k_max, k_max}}, {"ky", {-k_max, k_max}}, {"omega", temporal ? json{-w_max, w_max} : json{0.0, 0.0}}}},
              {"real", re_path.filename().string()},
              {"imag", im_path.filename().string()}};
    if (temporal) {
      meta["group"] = {{"b", {g.b.x, g.b.y}}, {"tau", g.tau}, {"theta", g.theta},
                       {"a_s", g.a_s},        {"a_t", g.a_t}, {"c", g.c}};
    }
    if (type == "morlet2d") {
      meta["morlet"] = {{"k0", {k0x, k0y}}, {"epsilon", eps}, {"correction", correction}};
    } else {
      meta["gcm"] = {{"l", params.l},
                     {"m", params.m},
                     {"sigma", params.sigma},
                     {"omega0", params.temporal_center()},
                     {"alpha", params.cone.alpha},
                     {"axis", params.cone.theta_axis}};
      if (type == "cauchy2d") meta["eta"] = {eta_vec.x, eta_vec.y};
    }
    emit(meta.dump(2) + '\n', out + ".json", out_stream);
    out_stream << "wrote " << re_path.string() << ", " << im_path.string() << " (" << dims.nx << 'x'
               << dims.ny << 'x' << dims.nt << ")\n";
    return kExitOk;
  }
};

// ---- frame-bounds -------------------------------------------------------------

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

struct FrameBoundsCmd {
  Discretization disc;
  std::string l_range = "-4:4";
  std::string n_range = "-4:4";
  std::string q_range;
  bool no_polish = false;
  bool stub = false;
  std::string out;
  KernelFlags kernel;

  void add(CLI::App& app) {
    app.add_option("--a0", disc.a0, "Scale ratio a0 > 1")->capture_default_str();
    app.add_option("--c0", disc.c0, "Speed ratio c0 > 1")->capture_default_str();
    app.add_option("--q1", disc.q1, "Rotation step theta0 = pi/q1")->capture_default_str();
    app.add_option("--bx0", disc.bx0, "Translation step along x")->capture_default_str();
    app.add_option("--by0", disc.by0, "Translation step along y")->capture_default_str();
    app.add_option("--tau0", disc.tau0, "Translation step along t")->capture_default_str();
    app.add_option("--l-range", l_range, "Scale indices LO:HI")->capture_default_str();
    app.add_option("--n-range", n_range, "Speed indices LO:HI")->capture_default_str();
    app.add_option("--q-range", q_range, "Rotation indices LO:HI (default one full turn)");
    app.add_option("--grid", disc.grid, "Search samples per axis")->capture_default_str();
    app.add_option("--lattice", disc.lattice, "Translation lattice extent M")->capture_default_str();
    app.add_flag("--no-polish", no_polish, "Skip golden-section refinement of the extrema");
    app.add_flag("--stub", stub, "Tight-frame indicator kernel with single-term ranges");
    app.add_option("--out", out, "Output JSON (default stdout)");
    kernel.add(app);
  }

  int run(std::ostream& out_stream) {
    disc.scale = parse_index_range(l_range);
    disc.speed = parse_index_range(n_range);
    if (!q_range.empty()) disc.rotation = parse_index_range(q_range);
    disc.polish = !no_polish;
    if (stub) {
      disc.scale = {0, 0};
      disc.speed = {0, 0};
      disc.rotation = IndexRange{0, 0};
    }
    disc.validate();
    const auto report = stub ? estimate_bounds(disc, tight_frame_stub(disc))
                             : estimate_bounds(disc, kernel.params());
    const IndexRange rot = disc.rotation_range();
    json j{{"label", "estimate, not certificate"},
           {"kernel", report.kernel},
           {"valid", report.valid},
           {"lambda_minus", report.lambda_minus},
           {"lambda_plus", report.lambda_plus},
           {"gamma", report.gamma},
           {"A", report.A},
           {"B", report.B},
           {"ratio", number_or_null(report.ratio)},
           {"argmin", {{"k", {report.argmin_k.x, report.argmin_k.y}}, {"omega", report.argmin_omega}}},
           {"argmax", {{"k", {report.argmax_k.x, report.argmax_k.y}}, {"omega", report.argmax_omega}}},
           {"truncation",
            {{"lambda_tail", number_or_null(report.lambda_tail)}, {"gamma_tail", report.gamma_tail}}},
           {"discretization",
            {{"a0", disc.a0},
             {"c0", disc.c0},
             {"q1", disc.q1},
             {"theta0", disc.theta0()},
             {"l_range", {disc.scale.lo, disc.scale.hi}},
             {"n_range", {disc.speed.lo, disc.speed.hi}},
             {"q_range", {rot.lo, rot.hi}},
             {"bx0", disc.bx0},
             {"by0", disc.by0},
             {"tau0", disc.tau0},
             {"grid", disc.grid},
             {"lattice", disc.lattice},
             {"polish", disc.polish}}}};
    if (!stub) {
      const GcmParams p = kernel.params();
      j["gcm"] = {{"l", p.l}, {"m", p.m}, {"sigma", p.sigma}, {"omega0", p.temporal_center()}, {"alpha", p.cone.alpha}};
    }
    emit(j.dump(2) + '\n', out, out_stream);
    return report.valid ? kExitOk : kExitInvalidFrame;
  }
};

// ---- compare-aperture -----------------------------------------------------------

struct CompareApertureCmd {
  std::string morlet_k0 = "6,12,22";
  std::string morlet_eps = "1,2,8";
  std::string gcm_alpha = "pi/256,pi/64,pi/16";
  double step = 0.05;
  std::string out;
  KernelFlags kernel;

  void add(CLI::App& app) {
    app.add_option("--morlet-k0", morlet_k0, "Morlet |k0| list (k0 along kx)")->capture_default_str();
    app.add_option("--morlet-eps", morlet_eps, "Morlet epsilon list, paired with --morlet-k0")->capture_default_str();
    app.add_option("--gcm-alpha", gcm_alpha, "GC half-aperture list")->capture_default_str();
    app.add_option("--grid-step", step, "Frequency-grid step for the argmax search")->capture_default_str();
    app.add_option("--out", out, "Output CSV (default stdout)");
    kernel.add(app);
  }

  int run(std::ostream& out_stream) const {
    const auto k0s = parse_angle_list(morlet_k0);
    const auto epss = parse_angle_list(morlet_eps);
    const auto alphas = parse_angle_list(gcm_alpha);
    if (k0s.size() != epss.size())
      throw std::invalid_argument("--morlet-k0 and --morlet-eps must have the same length");
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");

    std::string csv = "family,params,arp,radial_center\n";
    for (std::size_t i = 0; i < k0s.size(); ++i) {
      const MorletParams p{{k0s[i], 0.0}, epss[i]};
      p.validate();
      const double center = magnitude_argmax_radius(
          [&](Vec2 k) { return eval_morlet_2d(k, p); }, step, std::abs(k0s[i]) + 10.0);
      csv += "morlet,k0=" + format_number(k0s[i]) + ";eps=" + format_number(epss[i]) + ',' +
             format_number(arp_morlet(p)) + ',' + format_number(center) + '\n';
    }
    for (double alpha : alphas) {
      GcmParams p = kernel.params();
      p.cone.alpha = alpha;
      p.validate();
      const GcEvaluator gc(p);
      const double center =
          magnitude_argmax_radius([&](Vec2 k) { return gc(k); }, step, 2.0 * p.center_radius() + 10.0);
      csv += "gcm,alpha=" + format_number(alpha) + ";l=" + std::to_string(p.l) +
             ";m=" + std::to_string(p.m) + ";sigma=" + format_number(p.sigma) + ',' +
             format_number(arp_conical(p.cone)) + ',' + format_number(center) + '\n';
    }
    csv += "# grid_step=" + format_number(step) + '\n';
    emit(csv, out, out_stream);
    return kExitOk;
  }
};

}  // namespace

double magnitude_argmax_radius(const std::function<double(Vec2)>& f, double step, double radius) {
  const auto n = static_cast<long>(std::floor(radius / step));
  double best = -1.0;
  Vec2 best_k{};
  for (long iy = -n; iy <= n; ++iy)
    for (long ix = -n; ix <= n; ++ix) {
      const Vec2 k{static_cast<double>(ix) * step, static_cast<double>(iy) * step};
      if (norm(k) > radius) continue;
      const double v = std::abs(f(k));
      if (v > best) {
        best = v;
        best_k = k;
      }
    }
  return norm(best_k);
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spatio-temporal conical wavelet toolkit: synthetic sequences, speed scans, filter dumps, frame bounds"};
  app.name("gcmtool");
  app.require_subcommand(1);

  SynthCmd synth;
  ScanCmd scan;
  SweepCmd orient(SweepCmd::Kind::orientation);
  SweepCmd aperture(SweepCmd::Kind::aperture);
  KernelCmd kernel;
  FrameBoundsCmd frames;
  CompareApertureCmd compare;

  auto* synth_app = app.add_subcommand("synth", "Generate a travelling-Gaussian test sequence");
  synth.add(*synth_app);
  auto* scan_app = app.add_subcommand("scan", "Energy vs. speed tuning; CSV c,energy");
  scan.add(*scan_app);
  auto* orient_app = app.add_subcommand("orient-scan", "Detected speed vs. orientation");
  orient.add(*orient_app);
  auto* aperture_app = app.add_subcommand("aperture-sweep", "Detected speed vs. aperture");
  aperture.add(*aperture_app);
  auto* kernel_app = app.add_subcommand("kernel", "Sample a filter on a frequency grid");
  kernel.add(*kernel_app);
  auto* frames_app = app.add_subcommand("frame-bounds", "Frame-bound estimate for the discretized family");
  frames.add(*frames_app);
  auto* compare_app = app.add_subcommand("compare-aperture", "Angular resolving power and radial centre");
  compare.add(*compare_app);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (synth_app->parsed()) return synth.run(out);
    if (scan_app->parsed()) return scan.run(out);
    if (orient_app->parsed()) return orient.run(out);
    if (aperture_app->parsed()) return aperture.run(out);
    if (kernel_app->parsed()) return kernel.run(out);
    if (frames_app->parsed()) return frames.run(out);
    if (compare_app->parsed()) return compare.run(out);
  } catch (const IoError& e) {
    err << "gcmtool: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "gcmtool: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "gcmtool: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gcm::cli
