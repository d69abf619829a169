#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace qdiscord {

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a minimum of a unimodal `f` on [lo, hi].
template <class F>
GoldenResult golden_section(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

struct NelderMeadOptions {
  double diameter_tol = 1e-6;  // stop when every vertex is this close to the best one
  std::size_t max_iterations = 5000;
};

template <std::size_t N>
struct NelderMeadResult {
  std::array<double, N> x{};
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Standard Nelder–Mead (reflection 1, expansion 2, contraction ½, shrink ½)
/// from the axis-aligned simplex {start, start + step_i e_i}.
template <std::size_t N, class F>
NelderMeadResult<N> nelder_mead(F&& f, const std::array<double, N>& start, const std::array<double, N>& step,
                                const NelderMeadOptions& opts = {}) {
  using Point = std::array<double, N>;
  std::array<Point, N + 1> p;
  std::array<double, N + 1> fv;
  p[0] = start;
  for (std::size_t i = 0; i < N; ++i) {
    p[i + 1] = start;
    p[i + 1][i] += step[i];
  }
  for (std::size_t i = 0; i <= N; ++i) fv[i] = f(p[i]);

  auto blend = [](const Point& a, const Point& b, double t) {
    Point r;
    for (std::size_t k = 0; k < N; ++k) r[k] = a[k] + t * (b[k] - a[k]);
    return r;
  };

  NelderMeadResult<N> res;
  std::array<std::size_t, N + 1> order;
  for (; res.iterations < opts.max_iterations; ++res.iterations) {
    for (std::size_t i = 0; i <= N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return fv[i] < fv[j]; });
    const std::size_t best = order[0], worst = order[N], second = order[N - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= N; ++i) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < N; ++k) d2 += (p[i][k] - p[best][k]) * (p[i][k] - p[best][k]);
      diameter = std::max(diameter, std::sqrt(d2));
    }
    if (diameter < opts.diameter_tol) {
      res.converged = true;
      break;
    }

    Point centroid{};
    for (std::size_t i = 0; i <= N; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < N; ++k) centroid[k] += p[i][k] / static_cast<double>(N);
    }

    const Point reflected = blend(centroid, p[worst], -1.0);
    const double fr = f(reflected);
    if (fr < fv[best]) {
      const Point expanded = blend(centroid, p[worst], -2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        p[worst] = expanded;
        fv[worst] = fe;
      } else {
        p[worst] = reflected;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      p[worst] = reflected;
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    const Point contracted = outside ? blend(centroid, reflected, 0.5) : blend(centroid, p[worst], 0.5);
    const double fc = f(contracted);
    if (fc < (outside ? fr : fv[worst])) {
      p[worst] = contracted;
      fv[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= N; ++i) {
      if (i == best) continue;
      p[i] = blend(p[best], p[i], 0.5);
      fv[i] = f(p[i]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
  res.x = p[best];
  res.value = fv[best];
  return res;
}

}  // namespace qdiscord
