#pragma once

#include "qdiscord/landscape.hpp"
#include "qdiscord/states.hpp"

#include <string_view>
#include <vector>

namespace qdiscord {

/// One-parameter preset families whose reference discord and quantifiers are
/// compared side by side.
enum class Family { rho_theta, phase, three };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);
/// rho_theta/three are real states (real mode); phase needs complex mode.
ZeroLineMode family_mode(Family f);
SeparableState family_state(Family f, double parameter);

struct CompareRow {
  double parameter = 0.0;
  double discord = 0.0;  // measured on A
  QuantifierResult quantifier;
};

/// `points` equally spaced parameters in [from, to] (both included; a single
/// point uses `from`).
std::vector<CompareRow> compare_family(Family f, double from, double to, std::size_t points,
                                       std::size_t beta_samples = kDefaultBetaSamples, unsigned threads = 1);

}  // namespace qdiscord
