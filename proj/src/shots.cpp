#include "qdiscord/shots.hpp"

#include "qdiscord/parallel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <set>

namespace qdiscord {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

struct Branch {
  double cumulative;  // P(component ≤ ν)
  double p_a;
  double p_b;
};

std::vector<Branch> branches(const SeparableState& state, const EvolutionParams& params, double phi_d) {
  const Mat2 sa = (detector_matrix(phi_d) * s_matrix(params.alpha, params.phi_a)).matrix();
  const Mat2 sb = s_matrix(params.beta, params.phi_b).matrix();
  std::vector<Branch> out;
  double cum = 0.0;
  for (const auto& c : state.components()) {
    cum += c.weight;
    out.push_back({cum, std::norm((sa * c.a_ket().amplitudes())(0)), std::norm((sb * c.b_ket().amplitudes())(0))});
  }
  out.back().cumulative = 1.0;
  return out;
}

inline double uniform01(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

std::uint64_t run_chunk(const std::vector<Branch>& br, std::uint64_t trials, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double u = uniform01(eng);
    std::size_t k = 0;
    while (u >= br[k].cumulative) ++k;
    const bool a = uniform01(eng) < br[k].p_a;
    const bool b = uniform01(eng) < br[k].p_b;
    hits += (a && b) ? 1 : 0;
  }
  return hits;
}

}  // namespace

std::uint64_t sample_coincidences(const SeparableState& state, const EvolutionParams& params, double phi_d,
                                  std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (trials == 0) return 0;
  const auto br = branches(state, params, phi_d);
  const std::uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t begin = c * kTrialsPerChunk;
    const std::uint64_t n = std::min(kTrialsPerChunk, trials - begin);
    hits[c] = run_chunk(br, n, derive_seed(seed, c));
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  return total;
}

void ShotConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::set<double> distinct;
  for (double p : phi_d) {
    if (!std::isfinite(p)) throw std::invalid_argument("phi_d points must be finite");
    distinct.insert(canonical_angle(p));
  }
  if (distinct.size() < 3) throw std::invalid_argument("need at least 3 distinct phi_d points");
}

std::vector<double> uniform_phases(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
  return out;
}

VisibilityEstimate estimate_visibility(const ShotConfig& config) {
  config.validate();
  const std::size_t n = config.phi_d.size();
  VisibilityEstimate est;
  est.points.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto& p = est.points[k];
    p.phi_d = config.phi_d[k];
    p.trials = config.trials;
    p.coincidences = sample_coincidences(config.state, config.params, p.phi_d, config.trials,
                                         derive_seed(config.seed, k), config.threads);
    const double t = static_cast<double>(p.trials);
    p.k_hat = static_cast<double>(p.coincidences) / t;
    p.k_stderr = std::sqrt(p.k_hat * (1.0 - p.k_hat) / t);
  }

  Eigen::MatrixXd x(n, 3);
  Eigen::VectorXd y(n), var(n);
  for (std::size_t k = 0; k < n; ++k) {
    x(k, 0) = 1.0;
    x(k, 1) = std::cos(est.points[k].phi_d);
    x(k, 2) = std::sin(est.points[k].phi_d);
    y(k) = est.points[k].k_hat;
    var(k) = est.points[k].k_stderr * est.points[k].k_stderr;
  }
  const Eigen::Matrix3d xtx = x.transpose() * x;
  const Eigen::Matrix3d xtx_inv = xtx.inverse();
  const Eigen::Vector3d coef = xtx_inv * (x.transpose() * y);
  const Eigen::Matrix3d cov = xtx_inv * x.transpose() * var.asDiagonal() * x * xtx_inv;

  const double c = coef(0), a = coef(1), b = coef(2);
  if (!(c > 0.0)) throw FitError("fitted fringe offset is not positive (dark point or too few coincidences)");
  // a cos φ + b sin φ = R cos(φ + δ) with R = hypot(a, b), δ = atan2(−b, a).
  const double r = std::hypot(a, b);
  est.offset = c;
  est.amplitude = 0.5 * r;
  est.phase = std::atan2(-b, a);
  est.visibility = r / c;

  Eigen::Vector3d grad;
  if (r > 0.0)
    grad << -r / (c * c), a / (r * c), b / (r * c);
  else
    grad << 0.0, 1.0 / (std::sqrt(2.0) * c), 1.0 / (std::sqrt(2.0) * c);
  est.stderr = std::sqrt(std::max(0.0, grad.dot(cov * grad)));
  return est;
}

}  // namespace qdiscord
