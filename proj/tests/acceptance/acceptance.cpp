// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include "../oracles.hpp"
#include "qdiscord/compare.hpp"
#include "qdiscord/discord_ref.hpp"
#include "qdiscord/landscape.hpp"
#include "qdiscord/protocol.hpp"
#include "qdiscord/shots.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace qdiscord;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

QuantifierResult quantify(const SeparableState& s, ZeroLineMode mode = ZeroLineMode::complex) {
  return combined_quantifier(zero_line(s, kDefaultBetaSamples, 0.0, mode));
}

SeparableState random_state(std::mt19937_64& rng) {
  const int m = 1 + static_cast<int>(rng() % 4);
  std::vector<PureComponent> comps;
  double left = 1.0;
  for (int k = 0; k < m; ++k) {
    const double w = k + 1 == m ? left : left * oracle::uniform(rng, 0.1, 0.9);
    left -= w;
    comps.push_back({w, oracle::random_angles(rng), oracle::random_angles(rng)});
  }
  return SeparableState::create(std::move(comps));
}

Outcome equivalence() {
  std::mt19937_64 rng(1001);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto s = random_state(rng);
    const EvolutionParams p{oracle::uniform(rng, 0, kTwoPi), oracle::uniform(rng, 0, kTwoPi),
                            oracle::uniform(rng, 0, kTwoPi), oracle::uniform(rng, 0, kTwoPi)};
    const double phi_d = oracle::uniform(rng, 0, kTwoPi);
    worst = std::max(worst, std::abs(coincidence(s, p, phi_d) - coincidence_conditioned(s, p, phi_d)));
  }
  return {worst < 1e-12, "max |K_full - K_conditioned| = " + fmt("%.3g", worst)};
}

Outcome witness() {
  std::mt19937_64 rng(1002);
  double max_zero = 0, min_pos = 1e9;
  for (const char* name : {"fig2b", "fig6a", "fig6b"}) max_zero = std::max(max_zero, quantify(preset(name)).sum);
  for (int i = 0; i < 100; ++i) max_zero = std::max(max_zero, quantify(oracle::random_product(rng)).sum);
  min_pos = std::min(min_pos, quantify(preset("fig2a")).sum);
  min_pos = std::min(min_pos, quantify(preset("three", {.theta = kPi / 2})).sum);
  min_pos = std::min(min_pos, quantify(preset("phase", {.phi2 = kPi / 2})).sum);
  for (int i = 0; i < 100; ++i) min_pos = std::min(min_pos, quantify(oracle::random_discorded(rng)).sum);
  return {max_zero < 1e-8 && min_pos > 1e-6,
          "max over non-discorded = " + fmt("%.3g", max_zero) + ", min over discorded = " + fmt("%.3g", min_pos)};
}

Outcome analytic_point() {
  const auto s = preset("phase", {.phi2 = kPi / 2});
  // β = 2π/3 is sample 16 of 48.
  const auto line = zero_line(s, 48, 0.0, ZeroLineMode::complex);
  const auto& z = line.samples[16];
  const double target = std::atan((2 - std::sqrt(3.0)) / 3);
  // Both zero branches are accepted: φ_A0 is compared modulo π.
  const double err = std::abs(std::remainder(z.phi_a0 - target, kPi));
  return {z.valid && std::abs(std::cos(z.alpha0)) < 1e-9 && err < 1e-4,
          "alpha0 = " + fmt("%.10f", z.alpha0) + ", phiA0 = " + fmt("%.10f", std::remainder(z.phi_a0, kPi)) +
              " (mod pi), target " + fmt("%.10f", target) + ", |diff| = " + fmt("%.3g", err)};
}

bool single_peaked(const std::vector<double>& v) {
  std::size_t k = 0;
  while (k + 1 < v.size() && v[k + 1] >= v[k]) ++k;
  while (k + 1 < v.size() && v[k + 1] <= v[k]) ++k;
  return k + 1 == v.size();
}

Outcome endpoints() {
  bool ok = true;
  std::ostringstream detail;
  for (Family f : {Family::rho_theta, Family::phase, Family::three}) {
    const auto rows = compare_family(f, 0.0, kPi, 25);
    std::vector<double> d, q;
    for (const auto& r : rows) {
      d.push_back(r.discord);
      q.push_back(r.quantifier.sum);
    }
    const double ends = std::max({d.front(), d.back(), q.front(), q.back()});
    const bool peaks = single_peaked(d) && single_peaked(q);

    const auto dk = static_cast<std::size_t>(std::max_element(d.begin(), d.end()) - d.begin());
    const auto qk = static_cast<std::size_t>(std::max_element(q.begin(), q.end()) - q.begin());
    const double scan = oracle::discord_a_scan(assemble_density(family_state(f, rows[dk].parameter)).matrix());
    const auto qs = family_state(f, rows[qk].parameter);
    double dense = oracle::delta2_alpha_dense(qs);
    if (family_mode(f) == ZeroLineMode::complex) dense += oracle::delta2_phi_dense(qs);
    const double d_err = std::abs(d[dk] - scan), q_err = std::abs(q[qk] - dense);

    const bool fam_ok = ends < 1e-6 && peaks && d_err < 1e-6 && q_err < 1e-6;
    ok = ok && fam_ok;
    detail << family_name(f) << ": ends " << fmt("%.2g", ends) << (peaks ? ", single-peaked" : ", NOT single-peaked")
           << ", peak discord " << fmt("%.8f", d[dk]) << " (scan diff " << fmt("%.2g", d_err) << "), peak sum "
           << fmt("%.8f", q[qk]) << " (dense diff " << fmt("%.2g", q_err) << "); ";
  }
  return {ok, detail.str()};
}

Outcome passive_unitaries() {
  std::mt19937_64 rng(1005);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const auto s = oracle::random_non_discorded(rng, 2 + i % 3);
    for (int j = 0; j < 20; ++j) worst = std::max(worst, quantify(oracle::rotate_b(s, oracle::random_unitary(2, rng))).sum);
  }
  return {worst < 1e-8, "max sum over 400 rotated states = " + fmt("%.3g", worst)};
}

Outcome shot_noise() {
  const auto s = preset("fig2a");
  const EvolutionParams p{kPi, 0.0, kPi, 0.0};
  const double exact = *visibility(s, p);
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  double max_dev = 0, sq = 0, se = 0;
  const int seeds = 20;
  for (int i = 0; i < seeds; ++i) {
    const auto e = estimate_visibility({s, p, uniform_phases(24), 1000000, 20240000u + i, threads});
    const double dev = e.visibility - exact;
    max_dev = std::max(max_dev, std::abs(dev));
    sq += dev * dev / seeds;
    se += e.stderr / seeds;
  }
  const double ratio = se / std::sqrt(sq);
  return {max_dev <= 0.01 && ratio >= 1 / 1.5 && ratio <= 1.5,
          "V = " + fmt("%.6f", exact) + ", max |dV| = " + fmt("%.2g", max_dev) + ", mean stderr / rms dev = " +
              fmt("%.3f", ratio)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string("'") + QDISCORD_CLI + "' --quiet " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "qdiscord_acceptance";
  fs::create_directories(dir);
  std::vector<std::string> problems;
  for (const char* name : {"fig2a", "fig2b"}) {
    const std::string args = std::string("landscape --preset ") + name + " --axes alpha,beta --steps 64,64 --phiA 0 --out ";
    const fs::path a = dir / (std::string(name) + "_a.csv"), b = dir / (std::string(name) + "_b.csv");
    if (run(args + a.string()) != 0 || run(args + b.string()) != 0) {
      problems.push_back(std::string(name) + " run failed");
      continue;
    }
    if (slurp(a) != slurp(b)) problems.push_back(std::string(name) + " rerun differs");
    const fs::path golden = fs::path(QDISCORD_GOLDEN_DIR) / (std::string(name) + "_64x64.csv");
    if (!fs::exists(golden)) problems.push_back(golden.filename().string() + " missing");
    else if (slurp(a) != slurp(golden)) problems.push_back(std::string(name) + " differs from golden");
  }
  const std::string shots = "shots --preset fig2a --alpha 1.0 --beta 2.0 --trials 200000 --seed 7 --csv ";
  const fs::path s1 = dir / "s1.csv", s2 = dir / "s2.csv";
  if (run(shots + s1.string()) != 0 || run(shots + s2.string() + " --threads 3") != 0)
    problems.push_back("shots run failed");
  else if (slurp(s1) != slurp(s2))
    problems.push_back("shots rerun differs");
  std::string detail = "landscape reruns, goldens and seeded shots";
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

Outcome performance() {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  double worst = 0;
  std::string slowest;
  for (const auto& info : preset_catalog()) {
    GridSpec g;
    g.first = {Axis::alpha, 0, kTwoPi, 256};
    g.second = {Axis::beta, 0, kTwoPi, 256};
    const auto t0 = std::chrono::steady_clock::now();
    const auto l = sweep(preset(info.name), g, threads);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (l.values.size() != 65536) return {false, "wrong landscape size"};
    if (dt > worst) {
      worst = dt;
      slowest = info.name;
    }
  }
  return {worst < 5.0, "slowest preset " + slowest + ": " + fmt("%.3f", worst) + " s on " + std::to_string(threads) +
                           " thread(s)"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"algebraic equivalence", 5, equivalence},
      {"witness soundness", 30, witness},
      {"analytic phase point", 1, analytic_point},
      {"endpoint concordance", 300, endpoints},
      {"passive-unitary invariance", 30, passive_unitaries},
      {"shot-noise convergence", 120, shot_noise},
      {"determinism", 60, determinism},
      {"performance floor", 60, performance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.budget_s) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %zu %-28s %s  [%.2f s] %s\n", i + 1, c.name, o.pass ? "PASS" : "FAIL", dt, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
