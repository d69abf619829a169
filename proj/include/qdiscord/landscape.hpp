#pragma once

#include "qdiscord/protocol.hpp"
#include "qdiscord/states.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdiscord {

enum class Axis { alpha, beta, phi_a };

std::string_view axis_name(Axis axis);
/// Accepts "alpha", "beta", "phiA"; throws std::invalid_argument otherwise.
Axis parse_axis(std::string_view name);

/// `steps` equally spaced values from `lo` to `hi`, both included.
struct AxisRange {
  Axis axis = Axis::alpha;
  double lo = 0.0;
  double hi = kTwoPi;
  std::size_t steps = 2;

  double value(std::size_t i) const;
};

struct GridSpec {
  AxisRange first;
  AxisRange second;
  EvolutionParams fixed;  // values used for the parameters not on an axis

  /// Throws std::invalid_argument for steps < 2, equal axes or non-finite ranges.
  void validate() const;
  std::size_t size() const { return first.steps * second.steps; }
  EvolutionParams params_at(std::size_t i, std::size_t j) const;
};

/// Visibility on a grid; row-major with the first axis slow.
struct VisibilityLandscape {
  GridSpec grid;
  std::vector<double> values;    // NaN where masked
  std::vector<std::uint8_t> masked;  // 1 at dark points

  double at(std::size_t i, std::size_t j) const { return values[i * grid.second.steps + j]; }
  bool is_masked(std::size_t i, std::size_t j) const { return masked[i * grid.second.steps + j] != 0; }
};

VisibilityLandscape sweep(const SeparableState& state, const GridSpec& grid, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Zero-visibility lines

/// Bloch-vector length of ρ^{A|B} below which it counts as maximally mixed.
constexpr double kDegenerateBloch = 1e-10;
/// A sample is valid when the visibility at (α₀, φ_A0) is below this.
constexpr double kZeroVisibility = 1e-8;

struct DiagonalizingAngles {
  enum class Status { ok, dark, degenerate };
  Status status = Status::ok;
  double theta = 0.0;  // polar angle ϑ of the conditioned Bloch vector
  double phi = 0.0;    // azimuth ϕ̄

  bool ok() const { return status == Status::ok; }
};

/// Polar/azimuthal angles of the Bloch vector Σ w^B_ν a_ν of the conditioned state.
DiagonalizingAngles diagonalizing_angles(const SeparableState& state, double beta, double phi_b);

/// (α, φ_A) on the zero-visibility surface.
struct ZeroPoint {
  double alpha = 0.0;
  double phi_a = 0.0;
};

/// The two settings of S^A that send the conditioned state to a pole:
/// [0] rotates it to |↑⟩ (α = π − ϑ, φ_A = ϕ̄), [1] to |↓⟩ (α = ϑ, φ_A = ϕ̄ + π).
/// Angles are reduced to [0, 2π).
std::array<ZeroPoint, 2> zero_branches(const DiagonalizingAngles& angles);

enum class ZeroLineMode { real, complex };
enum class ZeroLineMethod { analytic, numeric };

std::string_view mode_name(ZeroLineMode mode);
ZeroLineMode parse_mode(std::string_view name);
std::string_view method_name(ZeroLineMethod method);
ZeroLineMethod parse_method(std::string_view name);

struct ZeroSample {
  double beta = 0.0;
  double alpha0 = 0.0;
  double phi_a0 = 0.0;
  double residual = 0.0;  // visibility at (α₀, φ_A0); NaN at dark points
  bool valid = false;
};

struct ZeroLine {
  ZeroLineMode mode = ZeroLineMode::complex;
  double phi_b = 0.0;
  std::vector<ZeroSample> samples;

  std::size_t valid_count() const;
};

constexpr std::size_t kMinBetaSamples = 16;
constexpr std::size_t kDefaultBetaSamples = 256;

/// Traces α₀(β), φ_A0(β) on `samples` uniform β values in [0, 2π).
///
/// The analytic method reads the angles off the conditioned Bloch vector; the
/// numeric method scans 512 α values, refines by golden section to 1e-10 and,
/// in complex mode, does the same over φ_A. Either way each sample is checked
/// by evaluating the visibility and flagged invalid when it is not below
/// kZeroVisibility. In real mode φ_A is pinned to 0.
ZeroLine zero_line(const SeparableState& state, std::size_t samples, double phi_b, ZeroLineMode mode,
                   ZeroLineMethod method = ZeroLineMethod::analytic, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Quantifiers

class QuantifierError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Variance over β of cos²α₀(β); periodic trapezoid over the valid samples.
/// Throws QuantifierError with fewer than two valid samples.
double delta2_alpha(const ZeroLine& line);
/// Same for cos²φ_A0(β).
double delta2_phi(const ZeroLine& line);

struct QuantifierResult {
  double delta2_alpha = 0.0;
  double delta2_phi = 0.0;
  double sum = 0.0;
  double valid_fraction = 0.0;
};

QuantifierResult combined_quantifier(const ZeroLine& line);

/// Sums below this are reported as "no discord detected".
constexpr double kDiscordDetectionThreshold = 1e-8;

}  // namespace qdiscord
