#include "qdiscord/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace qdiscord;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(FormatNumber, RoundTripsAndSpecialValues) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.5), "1.5");
  EXPECT_EQ(format_number(NAN), "nan");
  EXPECT_EQ(format_number(kPi), "3.1415926535897931");
  for (double v : {kPi, 1e-300, -2.5e17, 0.1, 1.0 / 3}) EXPECT_EQ(std::stod(format_number(v)), v);
}

TEST(LandscapeCsv, HeaderAndRows) {
  GridSpec g;
  g.first = {Axis::alpha, 0.0, kPi, 3};
  g.second = {Axis::beta, 0.0, kPi, 2};
  const auto l = sweep(preset("fig6b"), g);
  std::ostringstream out;
  write_landscape_csv(out, l);
  const auto text = out.str();
  EXPECT_EQ(text.find('\r'), std::string::npos);
  const auto ls = lines(text);
  std::size_t comments = 0;
  while (ls[comments].front() == '#') ++comments;
  EXPECT_EQ(comments, 4u);
  EXPECT_EQ(ls[comments], "alpha,beta,visibility,masked");
  ASSERT_EQ(ls.size(), comments + 1 + 6);
  EXPECT_EQ(ls[comments + 1].substr(0, 4), "0,0,");
  EXPECT_EQ(ls[comments + 2], "0,3.1415926535897931,nan,1");
  EXPECT_EQ(ls.back().substr(ls.back().size() - 6), ",nan,1");
}

TEST(ZeroLineCsv, Columns) {
  std::ostringstream out;
  write_zeroline_csv(out, zero_line(preset("fig2b"), 16, 0, ZeroLineMode::real));
  const auto ls = lines(out.str());
  ASSERT_EQ(ls.size(), 17u);
  EXPECT_EQ(ls[0], "beta,alpha0,phiA0,residual,valid");
  EXPECT_EQ(ls[1], "0,nan,nan,0,0");  // maximally mixed at β = 0
  EXPECT_EQ(ls[2].substr(ls[2].size() - 2), ",1");
}

TEST(Summaries, KeysInOrder) {
  std::ostringstream out;
  write_key_values(out, quantifier_summary({0.25, 0.0, 0.25, 1.0}));
  EXPECT_EQ(out.str(), "delta2_alpha=0.25\ndelta2_phi=0\nsum=0.25\nvalid_fraction=1\nverdict=discorded\n");
  const auto q = quantifier_summary({1e-20, 0.0, 1e-20, 0.5});
  EXPECT_EQ(q.back().second, "non-discorded");

  DiscordResult d;
  d.discord = 0.5;
  d.measured = Subsystem::B;
  const auto ds = discord_summary(d);
  EXPECT_EQ(ds[0], (std::pair<std::string, std::string>{"measured", "B"}));
  EXPECT_EQ(ds[1].first, "discord");
}

TEST(ShotsCsv, Columns) {
  VisibilityEstimate e;
  e.points = {{0.0, 10, 3, 0.3, 0.1}, {1.0, 10, 4, 0.4, 0.2}};
  std::ostringstream out;
  write_shots_csv(out, e);
  EXPECT_EQ(out.str(), "phi_d,trials,coincidences,k_hat,k_stderr\n0,10,3,0.29999999999999999,0.10000000000000001\n"
                       "1,10,4,0.40000000000000002,0.20000000000000001\n");
  const auto kv = shots_summary(e, 42);
  EXPECT_EQ(kv.back(), (std::pair<std::string, std::string>{"seed", "42"}));
}

TEST(CompareCsv, Columns) {
  std::ostringstream out;
  write_compare_csv(out, {{0.5, 0.1, {0.2, 0.0, 0.2, 1.0}}});
  EXPECT_EQ(out.str(), "parameter,discord,delta2_alpha,delta2_phi,sum\n0.5,0.10000000000000001,0.20000000000000001,0,"
                       "0.20000000000000001\n");
}
