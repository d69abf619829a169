#include "qdiscord/discord_ref.hpp"

#include "qdiscord/optimize.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qdiscord {

std::array<Mat2, 2> MeasurementBasis::projectors() const {
  const Mat2 p = Ket2::from_angles(theta, phi).projector();
  return {p, Mat2::Identity() - p};
}

double mutual_information(const Density4& rho) {
  return von_neumann_entropy(partial_trace(rho, Subsystem::B)) + von_neumann_entropy(partial_trace(rho, Subsystem::A)) -
         von_neumann_entropy(rho);
}

double conditional_entropy(const Density4& rho, const MeasurementBasis& basis, Subsystem measured) {
  double total = 0.0;
  for (const Mat2& proj : basis.projectors()) {
    const Mat4 m = measured == Subsystem::A ? tensor(proj, Mat2::Identity()) : tensor(Mat2::Identity(), proj);
    Mat2 other = partial_trace(Mat4(m * rho.matrix() * m), measured);
    const double p = other.trace().real();
    if (p < 1e-12) continue;
    other /= p;
    total += p * von_neumann_entropy(Eigen::MatrixXcd(0.5 * (other + other.adjoint())));
  }
  return total;
}

namespace {

constexpr std::size_t kThetaNodes = 64;
constexpr std::size_t kPhiNodes = 32;
constexpr std::size_t kStarts = 3;

}  // namespace

DiscordResult discord(const Density4& rho, Subsystem measured) {
  auto objective = [&](const std::array<double, 2>& x) {
    return conditional_entropy(rho, {x[0], x[1]}, measured);
  };

  const double dtheta = kPi / static_cast<double>(kThetaNodes);
  const double dphi = kTwoPi / static_cast<double>(kPhiNodes);
  struct Node {
    double value;
    std::array<double, 2> x;
  };
  std::vector<Node> nodes;
  nodes.reserve(kThetaNodes * kPhiNodes);
  for (std::size_t i = 0; i < kThetaNodes; ++i)
    for (std::size_t j = 0; j < kPhiNodes; ++j) {
      const std::array<double, 2> x{(static_cast<double>(i) + 0.5) * dtheta, static_cast<double>(j) * dphi};
      nodes.push_back({objective(x), x});
    }
  std::partial_sort(nodes.begin(), nodes.begin() + kStarts, nodes.end(),
                    [](const Node& a, const Node& b) { return a.value < b.value; });

  Node best = nodes.front();
  for (std::size_t k = 0; k < kStarts; ++k) {
    const auto r = nelder_mead<2>(objective, nodes[k].x, {0.5 * dtheta, 0.5 * dphi});
    if (r.value < best.value) best = {r.value, r.x};
  }

  const Subsystem other = measured == Subsystem::A ? Subsystem::B : Subsystem::A;
  // partial_trace(rho, other) leaves the measured side.
  const double s_measured = von_neumann_entropy(partial_trace(rho, other));
  DiscordResult res;
  res.measured = measured;
  res.basis = {best.x[0], best.x[1]};
  res.conditional_entropy = best.value;
  res.mutual_information = mutual_information(rho);
  res.discord = best.value - (von_neumann_entropy(rho) - s_measured);
  return res;
}

}  // namespace qdiscord
