#include "qdiscord/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace qdiscord {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of −0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_key_values(std::ostream& out, const KeyValues& kv) {
  for (const auto& [k, v] : kv) out << k << '=' << v << '\n';
}

void write_landscape_csv(std::ostream& out, const VisibilityLandscape& l) {
  const auto& g = l.grid;
  out << "# qdiscord visibility landscape\n"
      << "# axis1=" << axis_name(g.first.axis) << " range1=" << format_number(g.first.lo) << ':'
      << format_number(g.first.hi) << " steps1=" << g.first.steps << '\n'
      << "# axis2=" << axis_name(g.second.axis) << " range2=" << format_number(g.second.lo) << ':'
      << format_number(g.second.hi) << " steps2=" << g.second.steps << '\n'
      << "# fixed alpha=" << format_number(g.fixed.alpha) << " beta=" << format_number(g.fixed.beta)
      << " phiA=" << format_number(g.fixed.phi_a) << " phiB=" << format_number(g.fixed.phi_b) << '\n';
  out << axis_name(g.first.axis) << ',' << axis_name(g.second.axis) << ",visibility,masked\n";
  for (std::size_t i = 0; i < g.first.steps; ++i) {
    const std::string x = format_number(g.first.value(i));
    for (std::size_t j = 0; j < g.second.steps; ++j)
      out << x << ',' << format_number(g.second.value(j)) << ',' << format_number(l.at(i, j)) << ','
          << (l.is_masked(i, j) ? 1 : 0) << '\n';
  }
}

void write_zeroline_csv(std::ostream& out, const ZeroLine& line) {
  out << "beta,alpha0,phiA0,residual,valid\n";
  for (const auto& s : line.samples)
    out << format_number(s.beta) << ',' << format_number(s.alpha0) << ',' << format_number(s.phi_a0) << ','
        << format_number(s.residual) << ',' << (s.valid ? 1 : 0) << '\n';
}

KeyValues quantifier_summary(const QuantifierResult& q) {
  return {{"delta2_alpha", format_number(q.delta2_alpha)},
          {"delta2_phi", format_number(q.delta2_phi)},
          {"sum", format_number(q.sum)},
          {"valid_fraction", format_number(q.valid_fraction)},
          {"verdict", q.sum < kDiscordDetectionThreshold ? "non-discorded" : "discorded"}};
}

KeyValues discord_summary(const DiscordResult& d) {
  return {{"measured", d.measured == Subsystem::A ? "A" : "B"},
          {"discord", format_number(d.discord)},
          {"mutual_information", format_number(d.mutual_information)},
          {"conditional_entropy", format_number(d.conditional_entropy)},
          {"basis_theta", format_number(d.basis.theta)},
          {"basis_phi", format_number(d.basis.phi)}};
}

void write_shots_csv(std::ostream& out, const VisibilityEstimate& est) {
  out << "phi_d,trials,coincidences,k_hat,k_stderr\n";
  for (const auto& p : est.points)
    out << format_number(p.phi_d) << ',' << p.trials << ',' << p.coincidences << ',' << format_number(p.k_hat) << ','
        << format_number(p.k_stderr) << '\n';
}

KeyValues shots_summary(const VisibilityEstimate& est, std::uint64_t seed) {
  return {{"visibility", format_number(est.visibility)},
          {"stderr", format_number(est.stderr)},
          {"offset_C", format_number(est.offset)},
          {"amplitude_A", format_number(est.amplitude)},
          {"phase_delta", format_number(est.phase)},
          {"points", std::to_string(est.points.size())},
          {"seed", std::to_string(seed)}};
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
  out << "parameter,discord,delta2_alpha,delta2_phi,sum\n";
  for (const auto& r : rows)
    out << format_number(r.parameter) << ',' << format_number(r.discord) << ',' << format_number(r.quantifier.delta2_alpha)
        << ',' << format_number(r.quantifier.delta2_phi) << ',' << format_number(r.quantifier.sum) << '\n';
}

}  // namespace qdiscord
