#pragma once

#include "qdiscord/qcore.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdiscord {

struct Angles {
  double theta = 0.0;
  double phi = 0.0;
};

/// One term w |A⟩⟨A| ⊗ |B⟩⟨B| of a separable state.
struct PureComponent {
  double weight = 0.0;
  Angles a;
  Angles b;

  Ket2 a_ket() const { return Ket2::from_angles(a.theta, a.phi); }
  Ket2 b_ket() const { return Ket2::from_angles(b.theta, b.phi); }
  BlochVector a_bloch() const { return bloch_from_angles(a.theta, a.phi); }
};

constexpr double kWeightSumTol = 1e-12;
constexpr double kNegligibleWeight = 1e-12;

/// Mixture Σ w_ν |A_ν B_ν⟩⟨A_ν B_ν| with Σ w_ν = 1.
class SeparableState {
 public:
  /// Drops components with weight below 1e-12. Throws std::invalid_argument
  /// on negative or non-finite weights, non-finite angles, a weight sum away
  /// from 1, or an empty result.
  static SeparableState create(std::vector<PureComponent> components);

  const std::vector<PureComponent>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }

 private:
  explicit SeparableState(std::vector<PureComponent> c) : components_(std::move(c)) {}
  std::vector<PureComponent> components_;
};

Density4 assemble_density(const SeparableState& state);

/// Optional knobs for the parameterised presets.
struct PresetParams {
  std::optional<double> theta;  // rho_theta, three
  std::optional<double> phi2;   // phase
  std::optional<double> phi;    // fig6a common phase
};

struct PresetInfo {
  std::string name;
  std::string parameter;  // empty when the preset takes none
  std::string description;
};

const std::vector<PresetInfo>& preset_catalog();

class UnknownPresetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named example states; throws UnknownPresetError for an unknown name.
SeparableState preset(std::string_view name, const PresetParams& params = {});

// ---------------------------------------------------------------------------
// State config files
//
//   # comment
//   [component]
//   weight  = 0.5
//   A.theta = 1.5707963267948966
//   A.phi   = 0          # optional, default 0
//   B.theta = 0
//   B.phi   = 0          # optional, default 0
//
// One `[component]` section per term; angles in radians. `weight`, `A.theta`
// and `B.theta` are required; repeated or unknown keys are rejected.
// ---------------------------------------------------------------------------

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

SeparableState parse_state_config(std::string_view text);
/// Throws ConfigError (line 0) when the file cannot be read.
SeparableState load_state_config(const std::string& path);
std::string format_state_config(const SeparableState& state);

}  // namespace qdiscord
