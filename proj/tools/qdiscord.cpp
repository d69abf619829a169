// qdiscord: visibility landscapes, zero-visibility lines, correlation-based
// discord quantifiers, reference discord and shot-noise emulation.

#include "qdiscord/compare.hpp"
#include "qdiscord/discord_ref.hpp"
#include "qdiscord/io.hpp"
#include "qdiscord/landscape.hpp"
#include "qdiscord/shots.hpp"
#include "qdiscord/states.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace qdiscord;

constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 2, kParse = 3, kNumerical = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string out;
  unsigned threads = 1;
  bool quiet = false;
};

struct StateOptions {
  std::string preset;
  std::string state_file;
  std::optional<double> theta, phi2, phi;

  void add(CLI::App* app) {
    app->add_option("--preset", preset, "Named example state (see preset-list)");
    app->add_option("--state", state_file, "State config file");
    app->add_option("--theta", theta, "Preset parameter theta (rho_theta, three)");
    app->add_option("--phi2", phi2, "Preset parameter phi2 (phase)");
    app->add_option("--phi", phi, "Preset parameter phi (fig6a)");
  }

  SeparableState load() const {
    if (preset.empty() == state_file.empty()) throw UsageError("give exactly one of --preset or --state");
    if (!state_file.empty()) return load_state_config(state_file);
    try {
      return qdiscord::preset(preset, {theta, phi2, phi});
    } catch (const UnknownPresetError& e) {
      throw UsageError(e.what());
    }
  }
};

struct EvolutionOptions {
  double alpha = 0.0, beta = 0.0, phi_a = 0.0, phi_b = 0.0;

  void add(CLI::App* app) {
    app->add_option("--alpha", alpha, "BS1 angle of A (t_A = cos(alpha/2))")->capture_default_str();
    app->add_option("--beta", beta, "BS1 angle of B (t_B = cos(beta/2))")->capture_default_str();
    app->add_option("--phiA", phi_a, "Aharonov-Bohm phase of A")->capture_default_str();
    app->add_option("--phiB", phi_b, "Aharonov-Bohm phase of B")->capture_default_str();
  }
  EvolutionParams params() const { return {alpha, phi_a, beta, phi_b}; }
};

/// Records what a command did; written next to --out as <out>.manifest.json.
class RunManifest {
 public:
  explicit RunManifest(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

  void param(const std::string& key, const std::string& value) { params_[key] = value; }
  void param(const std::string& key, double value) { params_[key] = format_number(value); }
  void state(const SeparableState& s) { state_text_ = format_state_config(s); }
  void output(const std::string& path) { outputs_.push_back(path); }

  std::string digest() const {
    std::string canonical = command_ + '\n';
    for (const auto& [k, v] : params_) canonical += k + '=' + v + '\n';
    canonical += state_text_;
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(canonical.data(), canonical.size(), md, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
      std::snprintf(buf, sizeof buf, "%02x", md[i]);
      hex += buf;
    }
    return hex;
  }

  void write(const GlobalOptions& g) const {
    if (g.out.empty()) return;
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["parameters"] = params_;
    j["input_digest"] = "sha256:" + digest();
    j["outputs"] = outputs_;
    j["tool_version"] = kVersion;
    j["wall_clock_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::ofstream(g.out + ".manifest.json") << j.dump(2) << '\n';
  }

 private:
  std::string command_;
  std::map<std::string, std::string> params_;
  std::string state_text_;
  std::vector<std::string> outputs_;
  std::chrono::steady_clock::time_point start_;
};

template <class Writer>
void emit(const std::string& path, Writer&& writer, RunManifest& manifest) {
  if (path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  writer(f);
  manifest.output(path);
}

std::pair<double, double> parse_pair(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError(std::string(what) + " expects two comma-separated values");
  try {
    std::size_t used = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const double x = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    const double y = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError(std::string("bad value for ") + what + ": '" + s + "'");
  }
}

void record_state(RunManifest& m, const StateOptions& s, const SeparableState& state) {
  m.param("preset", s.preset);
  m.param("state_file", s.state_file);
  if (s.theta) m.param("theta", *s.theta);
  if (s.phi2) m.param("phi2", *s.phi2);
  if (s.phi) m.param("phi", *s.phi);
  m.state(state);
}

void say(const GlobalOptions& g, const std::string& msg) {
  if (!g.quiet) std::cerr << msg << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation-based detection and quantification of quantum discord in two-qubit separable states"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--quiet", g.quiet, "Suppress progress messages");
  app.fallthrough();

  // landscape
  auto* landscape = app.add_subcommand("landscape", "Visibility over a 2-D grid of control parameters");
  StateOptions ls_state;
  EvolutionOptions ls_evo;
  std::string ls_axes = "alpha,beta", ls_steps = "256,256", ls_range1 = "0,6.283185307179586",
              ls_range2 = "0,6.283185307179586";
  ls_state.add(landscape);
  ls_evo.add(landscape);
  landscape->add_option("--axes", ls_axes, "Two of alpha,beta,phiA")->capture_default_str();
  landscape->add_option("--steps", ls_steps, "Grid points per axis")->capture_default_str();
  landscape->add_option("--range1", ls_range1, "lo,hi of the first axis")->capture_default_str();
  landscape->add_option("--range2", ls_range2, "lo,hi of the second axis")->capture_default_str();

  // zeroline / quantify share options
  struct LineOptions {
    StateOptions state;
    std::size_t samples = kDefaultBetaSamples;
    double phi_b = 0.0;
    std::string mode = "complex";
    std::string method = "analytic";
    void add(CLI::App* a) {
      state.add(a);
      a->add_option("--samples", samples, "beta samples on [0, 2pi)")->capture_default_str();
      a->add_option("--phiB", phi_b, "Fixed phase of B")->capture_default_str();
      a->add_option("--mode", mode, "real | complex")->capture_default_str();
      a->add_option("--method", method, "analytic | numeric")->capture_default_str();
    }
  };
  auto* zeroline = app.add_subcommand("zeroline", "Zero-visibility line alpha0(beta), phiA0(beta)");
  LineOptions zl;
  zl.add(zeroline);

  auto* quantify = app.add_subcommand("quantify", "Delta^2 discord quantifiers from the zero-visibility line");
  LineOptions qt;
  std::string qt_line_out;
  qt.add(quantify);
  quantify->add_option("--line-out", qt_line_out, "Also write the zero-line CSV here");

  auto* discord_cmd = app.add_subcommand("discord", "Reference quantum discord by measurement minimisation");
  StateOptions dc_state;
  std::string dc_measured = "A";
  dc_state.add(discord_cmd);
  discord_cmd->add_option("--measured", dc_measured, "Measured subsystem, A or B")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Discord vs Delta^2 over a one-parameter family");
  std::string cp_family;
  double cp_from = 0.0, cp_to = kPi;
  std::size_t cp_points = 25, cp_samples = kDefaultBetaSamples;
  compare->add_option("--family", cp_family, "rho_theta | phase | three")->required();
  compare->add_option("--from", cp_from, "First parameter value")->capture_default_str();
  compare->add_option("--to", cp_to, "Last parameter value")->capture_default_str();
  compare->add_option("--points", cp_points, "Number of parameter values")->capture_default_str();
  compare->add_option("--samples", cp_samples, "beta samples per zero line")->capture_default_str();

  auto* shots = app.add_subcommand("shots", "Monte-Carlo emulation of the repeated measurement");
  StateOptions sh_state;
  EvolutionOptions sh_evo;
  long long sh_trials = 1000000;
  std::size_t sh_points = 24;
  std::optional<std::uint64_t> sh_seed;
  std::string sh_csv;
  sh_state.add(shots);
  sh_evo.add(shots);
  shots->add_option("--trials", sh_trials, "Trials per phi_d point")->capture_default_str();
  shots->add_option("--points", sh_points, "phi_d points, uniform on [0, 2pi)")->capture_default_str();
  shots->add_option("--seed", sh_seed, "64-bit RNG seed")->required();
  shots->add_option("--csv", sh_csv, "Per-point report CSV");

  auto* preset_list = app.add_subcommand("preset-list", "List the named example states");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*landscape) {
      RunManifest m("landscape");
      const auto state = ls_state.load();
      record_state(m, ls_state, state);
      const auto axes = ls_axes.find(',');
      if (axes == std::string::npos) throw UsageError("--axes expects two comma-separated names");
      const auto [n1, n2] = parse_pair(ls_steps, "--steps");
      if (n1 < 2 || n2 < 2 || n1 != std::floor(n1) || n2 != std::floor(n2)) throw UsageError("--steps must be integers >= 2");
      const auto [lo1, hi1] = parse_pair(ls_range1, "--range1");
      const auto [lo2, hi2] = parse_pair(ls_range2, "--range2");
      GridSpec grid;
      try {
        grid.first = {parse_axis(ls_axes.substr(0, axes)), lo1, hi1, static_cast<std::size_t>(n1)};
        grid.second = {parse_axis(ls_axes.substr(axes + 1)), lo2, hi2, static_cast<std::size_t>(n2)};
        grid.fixed = ls_evo.params();
        grid.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      m.param("axes", ls_axes);
      m.param("steps", std::to_string(grid.first.steps) + "," + std::to_string(grid.second.steps));
      m.param("range1", format_number(lo1) + "," + format_number(hi1));
      m.param("range2", format_number(lo2) + "," + format_number(hi2));
      m.param("alpha", ls_evo.alpha);
      m.param("beta", ls_evo.beta);
      m.param("phiA", ls_evo.phi_a);
      m.param("phiB", ls_evo.phi_b);
      const auto result = sweep(state, grid, g.threads);
      emit(g.out, [&](std::ostream& o) { write_landscape_csv(o, result); }, m);
      m.write(g);
      say(g, "landscape: " + std::to_string(grid.size()) + " grid points");
    } else if (*zeroline || *quantify) {
      const bool q = quantify->parsed();
      const LineOptions& o = q ? qt : zl;
      RunManifest m(q ? "quantify" : "zeroline");
      const auto state = o.state.load();
      record_state(m, o.state, state);
      ZeroLineMode mode;
      ZeroLineMethod method;
      try {
        mode = parse_mode(o.mode);
        method = parse_method(o.method);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (o.samples < kMinBetaSamples) throw UsageError("--samples must be at least 16");
      m.param("samples", std::to_string(o.samples));
      m.param("phiB", o.phi_b);
      m.param("mode", o.mode);
      m.param("method", o.method);
      const auto line = zero_line(state, o.samples, o.phi_b, mode, method, g.threads);
      if (!q) {
        emit(g.out, [&](std::ostream& os) { write_zeroline_csv(os, line); }, m);
      } else {
        if (!qt_line_out.empty()) emit(qt_line_out, [&](std::ostream& os) { write_zeroline_csv(os, line); }, m);
        QuantifierResult r;
        try {
          r = combined_quantifier(line);
        } catch (const QuantifierError& e) {
          throw NumericalError(e.what());
        }
        emit(g.out, [&](std::ostream& os) { write_key_values(os, quantifier_summary(r)); }, m);
      }
      m.write(g);
    } else if (*discord_cmd) {
      RunManifest m("discord");
      const auto state = dc_state.load();
      record_state(m, dc_state, state);
      if (dc_measured != "A" && dc_measured != "B") throw UsageError("--measured must be A or B");
      m.param("measured", dc_measured);
      const auto r = discord(assemble_density(state), dc_measured == "A" ? Subsystem::A : Subsystem::B);
      emit(g.out, [&](std::ostream& os) { write_key_values(os, discord_summary(r)); }, m);
      m.write(g);
    } else if (*compare) {
      RunManifest m("compare");
      Family family;
      try {
        family = parse_family(cp_family);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (cp_points < 1) throw UsageError("--points must be at least 1");
      if (cp_samples < kMinBetaSamples) throw UsageError("--samples must be at least 16");
      m.param("family", cp_family);
      m.param("from", cp_from);
      m.param("to", cp_to);
      m.param("points", std::to_string(cp_points));
      m.param("samples", std::to_string(cp_samples));
      std::vector<CompareRow> rows;
      try {
        rows = compare_family(family, cp_from, cp_to, cp_points, cp_samples, g.threads);
      } catch (const QuantifierError& e) {
        throw NumericalError(e.what());
      }
      emit(g.out, [&](std::ostream& os) { write_compare_csv(os, rows); }, m);
      m.write(g);
    } else if (*shots) {
      RunManifest m("shots");
      if (sh_trials < 1) throw UsageError("--trials must be at least 1");
      if (sh_points < 3) throw UsageError("--points must be at least 3");
      const auto state = sh_state.load();
      record_state(m, sh_state, state);
      m.param("alpha", sh_evo.alpha);
      m.param("beta", sh_evo.beta);
      m.param("phiA", sh_evo.phi_a);
      m.param("phiB", sh_evo.phi_b);
      m.param("trials", std::to_string(sh_trials));
      m.param("points", std::to_string(sh_points));
      m.param("seed", std::to_string(*sh_seed));
      ShotConfig cfg{state, sh_evo.params(), uniform_phases(sh_points), static_cast<std::uint64_t>(sh_trials), *sh_seed,
                     g.threads};
      VisibilityEstimate est;
      try {
        est = estimate_visibility(cfg);
      } catch (const FitError& e) {
        throw NumericalError(std::string("fit failure: ") + e.what());
      }
      if (!sh_csv.empty()) emit(sh_csv, [&](std::ostream& os) { write_shots_csv(os, est); }, m);
      emit(g.out, [&](std::ostream& os) { write_key_values(os, shots_summary(est, *sh_seed)); }, m);
      m.write(g);
    } else if (*preset_list) {
      RunManifest m("preset-list");
      emit(g.out,
           [&](std::ostream& os) {
             for (const auto& p : preset_catalog())
               os << p.name << '\t' << (p.parameter.empty() ? "-" : p.parameter) << '\t' << p.description << '\n';
           },
           m);
      m.write(g);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
