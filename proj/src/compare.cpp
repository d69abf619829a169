#include "qdiscord/compare.hpp"

#include "qdiscord/discord_ref.hpp"
#include "qdiscord/parallel.hpp"

namespace qdiscord {

Family parse_family(std::string_view name) {
  if (name == "rho_theta") return Family::rho_theta;
  if (name == "phase") return Family::phase;
  if (name == "three") return Family::three;
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected rho_theta, phase or three)");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::rho_theta: return "rho_theta";
    case Family::phase: return "phase";
    case Family::three: return "three";
  }
  return "?";
}

ZeroLineMode family_mode(Family f) { return f == Family::phase ? ZeroLineMode::complex : ZeroLineMode::real; }

SeparableState family_state(Family f, double parameter) {
  PresetParams p;
  if (f == Family::phase)
    p.phi2 = parameter;
  else
    p.theta = parameter;
  return preset(family_name(f), p);
}

std::vector<CompareRow> compare_family(Family f, double from, double to, std::size_t points, std::size_t beta_samples,
                                       unsigned threads) {
  if (points == 0) throw std::invalid_argument("compare needs at least one point");
  std::vector<CompareRow> rows(points);
  parallel_for(points, threads, [&](std::size_t k) {
    const double x = k == 0 ? from
                     : k + 1 == points ? to
                                       : from + (to - from) * static_cast<double>(k) / static_cast<double>(points - 1);
    const SeparableState state = family_state(f, x);
    rows[k].parameter = x;
    rows[k].discord = discord(assemble_density(state), Subsystem::A).discord;
    rows[k].quantifier = combined_quantifier(zero_line(state, beta_samples, 0.0, family_mode(f)));
  });
  return rows;
}

}  // namespace qdiscord
