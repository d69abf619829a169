#include "qdiscord/landscape.hpp"

#include "qdiscord/optimize.hpp"
#include "qdiscord/parallel.hpp"

#include <cmath>
#include <limits>

namespace qdiscord {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double& param_ref(EvolutionParams& p, Axis axis) {
  switch (axis) {
    case Axis::alpha: return p.alpha;
    case Axis::beta: return p.beta;
    case Axis::phi_a: return p.phi_a;
  }
  return p.alpha;
}

}  // namespace

std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::alpha: return "alpha";
    case Axis::beta: return "beta";
    case Axis::phi_a: return "phiA";
  }
  return "?";
}

Axis parse_axis(std::string_view name) {
  if (name == "alpha") return Axis::alpha;
  if (name == "beta") return Axis::beta;
  if (name == "phiA") return Axis::phi_a;
  throw std::invalid_argument("unknown axis '" + std::string(name) + "' (expected alpha, beta or phiA)");
}

double AxisRange::value(std::size_t i) const {
  if (i + 1 == steps) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void GridSpec::validate() const {
  if (first.steps < 2 || second.steps < 2) throw std::invalid_argument("grid axes need at least 2 steps");
  if (first.axis == second.axis) throw std::invalid_argument("grid axes must differ");
  for (const auto* r : {&first, &second})
    if (!std::isfinite(r->lo) || !std::isfinite(r->hi)) throw std::invalid_argument("grid ranges must be finite");
}

EvolutionParams GridSpec::params_at(std::size_t i, std::size_t j) const {
  EvolutionParams p = fixed;
  param_ref(p, first.axis) = first.value(i);
  param_ref(p, second.axis) = second.value(j);
  return p;
}

VisibilityLandscape sweep(const SeparableState& state, const GridSpec& grid, unsigned threads) {
  grid.validate();
  VisibilityLandscape out{grid, std::vector<double>(grid.size(), kNaN), std::vector<std::uint8_t>(grid.size(), 0)};
  const std::size_t cols = grid.second.steps;
  parallel_for(grid.first.steps, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto v = visibility(state, grid.params_at(i, j));
      if (v)
        out.values[i * cols + j] = std::min(1.0, *v);
      else
        out.masked[i * cols + j] = 1;
    }
  });
  return out;
}

DiagonalizingAngles diagonalizing_angles(const SeparableState& state, double beta, double phi_b) {
  const auto cond = conditioned_state(state, beta, phi_b);
  if (!cond) return {DiagonalizingAngles::Status::dark};
  const BlochVector a = cond->bloch();
  if (a.norm() < kDegenerateBloch) return {DiagonalizingAngles::Status::degenerate};
  return {DiagonalizingAngles::Status::ok, a.polar(), a.azimuth()};
}

std::array<ZeroPoint, 2> zero_branches(const DiagonalizingAngles& angles) {
  return {{{canonical_angle(kPi - angles.theta), canonical_angle(angles.phi)},
           {canonical_angle(angles.theta), canonical_angle(angles.phi + kPi)}}};
}

std::string_view mode_name(ZeroLineMode mode) { return mode == ZeroLineMode::real ? "real" : "complex"; }

ZeroLineMode parse_mode(std::string_view name) {
  if (name == "real") return ZeroLineMode::real;
  if (name == "complex") return ZeroLineMode::complex;
  throw std::invalid_argument("unknown zero-line mode '" + std::string(name) + "' (expected real or complex)");
}

std::string_view method_name(ZeroLineMethod method) { return method == ZeroLineMethod::analytic ? "analytic" : "numeric"; }

ZeroLineMethod parse_method(std::string_view name) {
  if (name == "analytic") return ZeroLineMethod::analytic;
  if (name == "numeric") return ZeroLineMethod::numeric;
  throw std::invalid_argument("unknown zero-line method '" + std::string(name) + "' (expected analytic or numeric)");
}

std::size_t ZeroLine::valid_count() const {
  std::size_t n = 0;
  for (const auto& s : samples) n += s.valid ? 1 : 0;
  return n;
}

namespace {

constexpr std::size_t kAlphaScan = 512;
constexpr std::size_t kPhiScan = 32;
constexpr double kRefineTol = 1e-10;

/// Coarse scan over [0, 2π) followed by golden-section refinement around the best node.
template <class F>
GoldenResult scan_and_refine(F&& f, std::size_t points) {
  const double h = kTwoPi / static_cast<double>(points);
  std::size_t best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < points; ++k) {
    const double v = f(h * static_cast<double>(k));
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  const double centre = h * static_cast<double>(best);
  auto r = golden_section(f, centre - h, centre + h, kRefineTol);
  r.x = canonical_angle(r.x);
  return r;
}

ZeroPoint analytic_zero(const ConditionedState& cond, ZeroLineMode mode) {
  const BlochVector a = cond.bloch();
  if (mode == ZeroLineMode::real) {
    // S^A(α, 0) turns the xz-plane polar angle θ into θ − π + α.
    return {canonical_angle(kPi - std::atan2(a.x, a.z)), 0.0};
  }
  return zero_branches({DiagonalizingAngles::Status::ok, a.polar(), a.azimuth()})[0];
}

ZeroPoint numeric_zero(const Density2& rho, ZeroLineMode mode) {
  auto best_alpha = [&](double phi_a) {
    return scan_and_refine([&](double alpha) { return visibility(rho, alpha, phi_a); }, kAlphaScan);
  };
  if (mode == ZeroLineMode::real) return {best_alpha(0.0).x, 0.0};
  const auto phi = scan_and_refine([&](double phi_a) { return best_alpha(phi_a).value; }, kPhiScan);
  return {best_alpha(phi.x).x, phi.x};
}

}  // namespace

ZeroLine zero_line(const SeparableState& state, std::size_t samples, double phi_b, ZeroLineMode mode,
                   ZeroLineMethod method, unsigned threads) {
  if (samples < kMinBetaSamples) throw std::invalid_argument("zero line needs at least 16 beta samples");
  ZeroLine line{mode, phi_b, std::vector<ZeroSample>(samples)};
  parallel_for(samples, threads, [&](std::size_t k) {
    ZeroSample& s = line.samples[k];
    s.beta = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    s.alpha0 = s.phi_a0 = s.residual = kNaN;
    const auto cond = conditioned_state(state, s.beta, phi_b);
    if (!cond) return;
    if (cond->bloch().norm() < kDegenerateBloch) {
      s.residual = 0.0;
      return;
    }
    const ZeroPoint z = method == ZeroLineMethod::analytic ? analytic_zero(*cond, mode) : numeric_zero(cond->rho, mode);
    s.alpha0 = z.alpha;
    s.phi_a0 = z.phi_a;
    s.residual = visibility(cond->rho, z.alpha, z.phi_a);
    s.valid = s.residual < kZeroVisibility;
  });
  return line;
}

namespace {

template <class F>
double periodic_variance(const ZeroLine& line, F&& f) {
  std::vector<const ZeroSample*> valid;
  for (const auto& s : line.samples)
    if (s.valid) valid.push_back(&s);
  if (valid.size() < 2) throw QuantifierError("quantifier needs at least two valid zero-line samples");

  const std::size_t m = valid.size();
  std::vector<double> weight(m), value(m);
  double total = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    double prev = valid[(k + m - 1) % m]->beta;
    double next = valid[(k + 1) % m]->beta;
    const double here = valid[k]->beta;
    if (prev >= here) prev -= kTwoPi;
    if (next <= here) next += kTwoPi;
    weight[k] = 0.5 * (next - prev);
    value[k] = f(*valid[k]);
    total += weight[k];
  }
  double mean = 0.0;
  for (std::size_t k = 0; k < m; ++k) mean += weight[k] * value[k];
  mean /= total;
  double var = 0.0;
  for (std::size_t k = 0; k < m; ++k) var += weight[k] * (value[k] - mean) * (value[k] - mean);
  return var / total;
}

double cos2(double x) {
  const double c = std::cos(x);
  return c * c;
}

}  // namespace

double delta2_alpha(const ZeroLine& line) {
  return periodic_variance(line, [](const ZeroSample& s) { return cos2(s.alpha0); });
}

double delta2_phi(const ZeroLine& line) {
  return periodic_variance(line, [](const ZeroSample& s) { return cos2(s.phi_a0); });
}

QuantifierResult combined_quantifier(const ZeroLine& line) {
  QuantifierResult r;
  r.delta2_alpha = delta2_alpha(line);
  r.delta2_phi = delta2_phi(line);
  r.sum = r.delta2_alpha + r.delta2_phi;
  r.valid_fraction = line.samples.empty() ? 0.0 : static_cast<double>(line.valid_count()) / static_cast<double>(line.samples.size());
  return r;
}

}  // namespace qdiscord
