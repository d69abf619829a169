#include "qdiscord/states.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace qdiscord;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_state_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ConfigError for:\n" << text;
  return 0;
}

}  // namespace

TEST(StateConfig, ParsesTwoComponents) {
  const auto s = parse_state_config(
      "# fig2a written out\n"
      "[component]\n"
      "weight = 0.5\n"
      "A.theta = 0\n"
      "B.theta = 0   # B.phi defaults to 0\n"
      "\n"
      "[component]\n"
      "  weight=0.5\n"
      "A.theta = 1.5707963267948966\n"
      "A.phi = 0.25\n"
      "B.theta = 1.5707963267948966\n"
      "B.phi = -1\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.components()[0].a.phi, 0.0);
  EXPECT_EQ(s.components()[0].b.phi, 0.0);
  EXPECT_EQ(s.components()[1].a.phi, 0.25);
  EXPECT_EQ(s.components()[1].b.phi, -1.0);
  EXPECT_EQ(s.components()[1].a.theta, 1.5707963267948966);
}

TEST(StateConfig, CrlfAndNoTrailingNewline) {
  const auto s = parse_state_config("[component]\r\nweight = 1\r\nA.theta = 1e-1\r\nB.theta = 2");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.components()[0].a.theta, 0.1);
  EXPECT_EQ(s.components()[0].b.theta, 2.0);
}

TEST(StateConfig, Errors) {
  EXPECT_EQ(error_line(""), 1u);
  EXPECT_EQ(error_line("# only a comment\n"), 2u);
  EXPECT_EQ(error_line("[component]\nweight = 1\nA.theta = 0\nB.theta = 0\nC.theta = 1\n"), 5u);
  EXPECT_EQ(error_line("[component]\nweight = 1\nweight = 1\nA.theta = 0\nB.theta = 0\n"), 3u);
  EXPECT_EQ(error_line("[state]\nweight = 1\n"), 1u);
  EXPECT_EQ(error_line("weight = 1\n[component]\n"), 1u);
  EXPECT_EQ(error_line("[component]\nweight = 1\nA.theta 0\n"), 3u);
  EXPECT_EQ(error_line("[component]\nweight = one\n"), 2u);
  EXPECT_EQ(error_line("[component]\nweight = 1.0x\n"), 2u);
  EXPECT_EQ(error_line("[component]\nweight = \n"), 2u);
  // Missing required key reported at the section header.
  EXPECT_EQ(error_line("\n[component]\nweight = 1\nA.theta = 0\n"), 2u);
  // Weights not summing to one.
  EXPECT_EQ(error_line("[component]\nweight = 0.4\nA.theta = 0\nB.theta = 0\n"), 1u);
  EXPECT_EQ(error_line("[component]\nweight = 1\nA.theta = nan\nB.theta = 0\n"), 1u);
}

TEST(StateConfig, RoundTripIsExact) {
  const auto s = preset("fig6a", {.phi = 0.123456789012345});
  const auto back = parse_state_config(format_state_config(s));
  ASSERT_EQ(back.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(back.components()[i].weight, s.components()[i].weight);
    EXPECT_EQ(back.components()[i].a.theta, s.components()[i].a.theta);
    EXPECT_EQ(back.components()[i].a.phi, s.components()[i].a.phi);
    EXPECT_EQ(back.components()[i].b.theta, s.components()[i].b.theta);
    EXPECT_EQ(back.components()[i].b.phi, s.components()[i].b.phi);
  }
}

TEST(StateConfig, LoadFile) {
  EXPECT_THROW(load_state_config("/nonexistent/state.cfg"), ConfigError);
  const std::string path = testing::TempDir() + "qdiscord_state.cfg";
  {
    std::ofstream out(path);
    out << format_state_config(preset("fig2a"));
  }
  EXPECT_EQ(load_state_config(path).size(), 2u);
  std::remove(path.c_str());
}
