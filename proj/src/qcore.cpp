#include "qdiscord/qcore.hpp"

#include <cmath>
#include <stdexcept>

namespace qdiscord {

double canonical_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Ket2 Ket2::from_angles(double theta, double phi) {
  // θ is 4π-periodic for the ket itself (2π up to sign).
  const double t = std::remainder(theta, 2.0 * kTwoPi);
  const double p = canonical_angle(phi);
  return Ket2(Vec2(Complex(std::cos(0.5 * t), 0.0), std::polar(std::sin(0.5 * t), p)));
}

Ket2 Ket2::from_amplitudes(const Vec2& amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("ket amplitudes must be finite and non-zero");
  return Ket2(amplitudes / n);
}

Ket2 Ket2::with_global_phase(double chi) const { return Ket2(amp_ * std::polar(1.0, chi)); }

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double BlochVector::polar() const { return std::atan2(std::hypot(x, y), z); }

double BlochVector::azimuth() const {
  const double n = norm();
  if (n == 0.0 || std::hypot(x, y) < 1e-12 * n) return 0.0;
  return std::atan2(y, x);
}

BlochVector bloch_from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

BlochVector bloch_of(const Mat2& rho) {
  // ρ01 = (a_x − i a_y)/2 for ρ = (1 + a·σ)/2
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

Unitary2::Unitary2(const Mat2& m) : m_(m) {
  const Mat2 d = m.adjoint() * m - Mat2::Identity();
  if (d.cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("matrix is not unitary");
}

template <int N>
Density<N>::Density(const Matrix& m) : m_(m) {
  if (!m.allFinite()) throw std::invalid_argument("density matrix has non-finite entries");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(m.trace() - Complex(1.0)) > kTraceTol) throw std::invalid_argument("density matrix trace differs from 1");
  if (eigenvalues().minCoeff() < kEigenFloor) throw std::invalid_argument("density matrix has a negative eigenvalue");
}

template <int N>
Eigen::Matrix<double, N, 1> Density<N>::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

template class Density<2>;
template class Density<4>;

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double von_neumann_entropy(const Eigen::MatrixXcd& m) {
  if (!is_hermitian(m)) throw std::invalid_argument("entropy requires a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lambda : es.eigenvalues()) {
    if (lambda < kEntropyClamp) continue;
    s -= lambda * std::log2(lambda);
  }
  return s;
}

Mat2 partial_trace(const Mat4& m, Subsystem traced) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        if (traced == Subsystem::B)
          out(i, j) += m(2 * i + k, 2 * j + k);
        else
          out(i, j) += m(2 * k + i, 2 * k + j);
      }
  return out;
}

Density2 partial_trace(const Density4& rho, Subsystem traced) {
  Mat2 r = partial_trace(rho.matrix(), traced);
  // Restore exact Hermiticity lost to rounding.
  r = 0.5 * (r + r.adjoint()).eval();
  return Density2(r);
}

}  // namespace qdiscord
