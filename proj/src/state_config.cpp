#include "qdiscord/states.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace qdiscord {

ConfigError::ConfigError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::size_t line) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(line, "expected a number, got '" + std::string(text) + "'");
  return v;
}

struct Section {
  std::size_t line = 0;
  std::map<std::string, double, std::less<>> values;
};

PureComponent to_component(const Section& s) {
  auto get = [&](std::string_view key, std::optional<double> fallback) {
    if (auto it = s.values.find(key); it != s.values.end()) return it->second;
    if (!fallback) throw ConfigError(s.line, "component is missing '" + std::string(key) + "'");
    return *fallback;
  };
  return {get("weight", std::nullopt),
          {get("A.theta", std::nullopt), get("A.phi", 0.0)},
          {get("B.theta", std::nullopt), get("B.phi", 0.0)}};
}

}  // namespace

SeparableState parse_state_config(std::string_view text) {
  static const std::array<std::string_view, 5> kKeys = {"weight", "A.theta", "A.phi", "B.theta", "B.phi"};

  std::vector<Section> sections;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line != "[component]") throw ConfigError(line_no, "unknown section '" + std::string(line) + "'");
      sections.push_back({line_no, {}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
    if (sections.empty()) throw ConfigError(line_no, "key outside of a [component] section");
    auto& values = sections.back().values;
    if (values.count(key) != 0) throw ConfigError(line_no, "duplicate key '" + std::string(key) + "'");
    values.emplace(std::string(key), parse_number(value, line_no));
  }
  if (sections.empty()) throw ConfigError(line_no, "no [component] sections");

  std::vector<PureComponent> components;
  components.reserve(sections.size());
  for (const auto& s : sections) components.push_back(to_component(s));
  try {
    return SeparableState::create(std::move(components));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(sections.front().line, e.what());
  }
}

SeparableState load_state_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "cannot open state file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_state_config(ss.str());
}

std::string format_state_config(const SeparableState& state) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& c : state.components()) {
    out << "[component]\n"
        << "weight = " << c.weight << "\n"
        << "A.theta = " << c.a.theta << "\n"
        << "A.phi = " << c.a.phi << "\n"
        << "B.theta = " << c.b.theta << "\n"
        << "B.phi = " << c.b.phi << "\n";
  }
  return out.str();
}

}  // namespace qdiscord
