#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "support.hpp"
#include "zagreb/constructors.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/instances.hpp"

namespace zagreb {
namespace {

IndexValue iv(std::uint64_t x) { return IndexValue(x); }

TEST(Pi1, Examples) {
  EXPECT_EQ(pi1(cycle(5)), iv(1024));
  EXPECT_EQ(pi1(complete(4)), iv(6561));
  const Graph cns = c_n_s({6, 2});
  EXPECT_EQ(pi1(cns), iv(1024));
  EXPECT_EQ(pi1(cns), min_pi1_bound({6, 2}));
  EXPECT_EQ(pi1(Graph(3, {Edge{0, 1}})), iv(0));
}

TEST(Pi2, Examples) {
  EXPECT_EQ(pi2(cycle(5)), iv(1024));
  EXPECT_EQ(pi2(star(4)), iv(27));
  const Graph cnp = c_n_p({6, 2});
  EXPECT_EQ(pi2(cnp), iv(6912));
  EXPECT_EQ(pi2(cnp), min_pi2_bound({6, 2}));
  EXPECT_EQ(pi2(Graph(3)), iv(1));
}

TEST(Pi2EdgeForm, Examples) {
  EXPECT_EQ(pi2_edge_form(cycle(5)), iv(1024));
  EXPECT_EQ(pi2_edge_form(complete(4)), iv(531441));
  EXPECT_EQ(pi2_edge_form(Graph(3)), iv(1));
}

TEST(FirstAndSecondZagreb, Examples) {
  EXPECT_EQ(m1(cycle(5)), iv(20));
  EXPECT_EQ(m2(cycle(5)), iv(20));
  EXPECT_EQ(m1(complete(4)), iv(36));
  EXPECT_EQ(m2(complete(4)), iv(54));
  EXPECT_EQ(m1(path(3)), iv(6));
  EXPECT_EQ(m2(path(3)), iv(4));
}

TEST(Indices, MatchNaiveProductsOnRandomGraphs) {
  instances::Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = instances::random_connected(rng, instances::uniform(rng, 1, 40), 0.2);
    ASSERT_EQ(pi1(g).value(), oracle::pi1(g));
    ASSERT_EQ(pi2(g).value(), oracle::pi2_vertex(g));
    ASSERT_EQ(pi2_edge_form(g).value(), oracle::pi2_edge(g));
    ASSERT_EQ(pi2(g), pi2_edge_form(g));
  }
}

TEST(Indices, LargeValuesStayExact) {
  // K30: pi2 = 29^(29*30).
  const Graph k30 = complete(30);
  EXPECT_EQ(pi2(k30).value(), oracle::pow_big(29, 29 * 30));
  EXPECT_EQ(pi1(k30).value(), oracle::pow_big(29, 60));
  EXPECT_EQ(pi2(k30).to_string(), oracle::pow_big(29, 870).str());
}

TEST(Indices, LogViewsAgreeWithExactValues) {
  const Graph g = k_n_s({8, 1});
  EXPECT_NEAR(ln_pi1(g), std::log(pi1(g).value().convert_to<double>()), 1e-9);
  EXPECT_NEAR(ln_pi2(g), std::log(pi2(g).value().convert_to<double>()), 1e-9);
}

TEST(IndexValue, Ordering) {
  EXPECT_LT(iv(2), iv(3));
  EXPECT_EQ(IndexValue(), iv(1));
  EXPECT_GT(IndexValue(oracle::pow_big(10, 40)), iv(~std::uint64_t{0}));
}

TEST(RatioT, Examples) {
  EXPECT_EQ(ratio_t(1, 1).to_string(), "1/2");
  EXPECT_EQ(ratio_t(2, 2).to_string(), "1/2");
  EXPECT_EQ(ratio_t(3, 1).to_string(), "3/4");
  EXPECT_EQ(testing::error_code([] { ratio_t(0, 1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(testing::error_code([] { ratio_t(1, 0); }), ErrorCode::kInvalidArgument);
}

TEST(RatioL, Examples) {
  EXPECT_EQ(ratio_l(1, 1).to_string(), "1/4");
  EXPECT_EQ(ratio_l(2, 1).to_string(), "4/27");
  EXPECT_EQ(ratio_l(2, 2).to_string(), "1/64");
  EXPECT_EQ(testing::error_code([] { ratio_l(0, 2); }), ErrorCode::kInvalidArgument);
}

TEST(Ratios, Monotone) {
  for (std::uint64_t m = 1; m <= 20; ++m) {
    for (std::uint64_t x = 1; x < 30; ++x) {
      EXPECT_LT(ratio_t(x, m), ratio_t(x + 1, m));
      EXPECT_GT(ratio_l(x, m), ratio_l(x + 1, m));
    }
  }
}

TEST(ExactRatio, ReducesAndCompares) {
  const ExactRatio r(6, 8);
  EXPECT_EQ(r.numerator(), 3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r, ExactRatio(3, 4));
  EXPECT_LT(ExactRatio(1, 3), ExactRatio(1, 2));
  EXPECT_EQ(testing::error_code([] { ExactRatio(1, 0); }), ErrorCode::kInvalidArgument);
}

TEST(Power, Basics) {
  EXPECT_EQ(power(0, 0), 1);
  EXPECT_EQ(power(2, 10), 1024);
  EXPECT_EQ(power(29, 870), oracle::pow_big(29, 870));
}

}  // namespace
}  // namespace zagreb
