#pragma once

#include "qdiscord/compare.hpp"
#include "qdiscord/discord_ref.hpp"
#include "qdiscord/landscape.hpp"
#include "qdiscord/shots.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qdiscord {

/// 17 significant digits ("%.17g"), "nan" for NaN.
std::string format_number(double v);

/// Writes "key=value" lines.
using KeyValues = std::vector<std::pair<std::string, std::string>>;
void write_key_values(std::ostream& out, const KeyValues& kv);

/// `# key=value` metadata lines, then `<axis1>,<axis2>,visibility,masked`.
void write_landscape_csv(std::ostream& out, const VisibilityLandscape& landscape);
/// beta,alpha0,phiA0,residual,valid
void write_zeroline_csv(std::ostream& out, const ZeroLine& line);
KeyValues quantifier_summary(const QuantifierResult& q);
KeyValues discord_summary(const DiscordResult& d);
/// phi_d,trials,coincidences,k_hat,k_stderr
void write_shots_csv(std::ostream& out, const VisibilityEstimate& est);
KeyValues shots_summary(const VisibilityEstimate& est, std::uint64_t seed);

/// parameter,discord,delta2_alpha,delta2_phi,sum
void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);

}  // namespace qdiscord
