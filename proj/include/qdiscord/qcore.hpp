#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>

namespace qdiscord {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;

enum class Subsystem { A, B };

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

/// Reduces an angle to [0, 2π).
double canonical_angle(double angle);

/// Pure qubit state in the (↑, ↓) basis.
class Ket2 {
 public:
  /// cos(θ/2)|↑⟩ + e^{iφ} sin(θ/2)|↓⟩.
  static Ket2 from_angles(double theta, double phi);
  /// Normalises `amplitudes`; throws std::invalid_argument on a zero vector.
  static Ket2 from_amplitudes(const Vec2& amplitudes);

  const Vec2& amplitudes() const { return amp_; }
  Complex up() const { return amp_(0); }
  Complex down() const { return amp_(1); }
  Mat2 projector() const { return amp_ * amp_.adjoint(); }
  Ket2 with_global_phase(double chi) const;

 private:
  explicit Ket2(const Vec2& amp) : amp_(amp) {}
  Vec2 amp_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  /// Polar angle in [0, π]; 0 for the null vector.
  double polar() const;
  /// Azimuth in (−π, π]; 0 when the vector lies on the z axis.
  double azimuth() const;

  BlochVector& operator+=(const BlochVector& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  friend BlochVector operator*(double s, const BlochVector& v) { return {s * v.x, s * v.y, s * v.z}; }
};

/// (sinθ cosφ, sinθ sinφ, cosθ)
BlochVector bloch_from_angles(double theta, double phi);
/// Bloch vector of a 2×2 Hermitian matrix: (Tr ρσ1, Tr ρσ2, Tr ρσ3).
BlochVector bloch_of(const Mat2& rho);

/// 2×2 unitary; construction checks U†U = 1 element-wise within 1e-12.
class Unitary2 {
 public:
  explicit Unitary2(const Mat2& m);
  const Mat2& matrix() const { return m_; }
  Unitary2 operator*(const Unitary2& o) const { return Unitary2(m_ * o.m_, Unchecked{}); }

 private:
  struct Unchecked {};
  Unitary2(const Mat2& m, Unchecked) : m_(m) {}
  Mat2 m_;
};

/// Density matrix of dimension N (2 or 4). Checked on construction:
/// Hermitian and unit trace within 1e-12, eigenvalues ≥ −1e-10.
template <int N>
class Density {
 public:
  using Matrix = Eigen::Matrix<Complex, N, N>;

  explicit Density(const Matrix& m);

  const Matrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  Eigen::Matrix<double, N, 1> eigenvalues() const;

 private:
  Matrix m_;
};

using Density2 = Density<2>;
using Density4 = Density<4>;

extern template class Density<2>;
extern template class Density<4>;

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenFloor = -1e-10;
/// Eigenvalues below this are treated as exact zeros in entropies.
constexpr double kEntropyClamp = 1e-12;

/// Kronecker product, first factor on the slow index.
Mat4 tensor(const Mat2& a, const Mat2& b);

/// −Σ λ log₂ λ; throws std::invalid_argument when `m` is not Hermitian.
double von_neumann_entropy(const Eigen::MatrixXcd& m);
template <int N>
double von_neumann_entropy(const Density<N>& rho) {
  return von_neumann_entropy(Eigen::MatrixXcd(rho.matrix()));
}

/// Traces out `traced` and returns the state of the other qubit.
Density2 partial_trace(const Density4& rho, Subsystem traced);
Mat2 partial_trace(const Mat4& m, Subsystem traced);

bool is_hermitian(const Eigen::MatrixXcd& m, double tol = kHermitianTol);

}  // namespace qdiscord
