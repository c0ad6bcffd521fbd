#include <gtest/gtest.h>

#include "altdes/errors.hpp"
#include "altdes/oracle.hpp"
#include "golden.hpp"

using namespace altdes;
using golden::poly;

TEST(Oracle, TwoSidedThree) {
  const BiPolyTQ want = BiPolyTQ::from_terms({{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {1, 1, 2}, {2, 2, 1}});
  EXPECT_EQ(brute_two_sided(3), want);
}

TEST(Oracle, Simsun) {
  EXPECT_EQ(brute_simsun(3), poly({1, 4}));
  EXPECT_EQ(brute_simsun(1), poly({1}));
}

TEST(Oracle, AltEulerianSmall) {
  const auto want = golden::alt_eulerian();
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(brute_alt_eulerian(n), want[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Oracle, QaltSpecializations) {
  for (int n = 1; n <= 7; ++n) {
    const BiPolyTQ q = brute_qalt(n);
    EXPECT_EQ(q.at_q_one(), brute_alt_eulerian(n));
    EXPECT_EQ(q.at_t_one(), stat_multiset(n, Statistic::AltMaj).generating_polynomial());
  }
}

TEST(Oracle, CdIndex) {
  const NCPoly c = NCPoly::letter('c');
  const NCPoly d = NCPoly::letter('d');
  const CdIndexOracle two = brute_cd_index(2);
  EXPECT_EQ(two.phi, c);
  EXPECT_EQ(two.psi, NCPoly::letter('a') + NCPoly::letter('b'));
  EXPECT_EQ(brute_cd_index(3).phi, c * c + d);
}

TEST(Oracle, StatMultisets) {
  const StatMultiset two = stat_multiset(2, Statistic::AltMaj);
  EXPECT_EQ(two.values, (std::map<long, std::uint64_t>{{0, 1}, {1, 1}}));
  const StatMultiset three = stat_multiset(3, Statistic::AltDes);
  EXPECT_EQ(three.values, (std::map<long, std::uint64_t>{{0, 2}, {1, 2}, {2, 2}}));
  EXPECT_EQ(three.total(), 6U);
}

TEST(Oracle, StatisticNames) {
  for (auto s : {Statistic::AltMaj, Statistic::AltDes, Statistic::Maj, Statistic::Des3}) {
    EXPECT_EQ(parse_statistic(statistic_name(s)), s);
  }
  EXPECT_THROW(parse_statistic("inv"), std::invalid_argument);
}

TEST(Oracle, BruteLimit) {
  OracleConfig cfg;
  cfg.brute_max = 5;
  EXPECT_THROW(brute_alt_eulerian(6, cfg), LimitExceeded);
  EXPECT_NO_THROW(brute_alt_eulerian(5, cfg));
  EXPECT_THROW(brute_alt_eulerian(-1, cfg), std::invalid_argument);
}

TEST(Oracle, JobsDoNotChangeResults) {
  OracleConfig serial;
  OracleConfig parallel;
  parallel.jobs = 4;
  EXPECT_EQ(brute_qalt(8, serial), brute_qalt(8, parallel));
  EXPECT_EQ(brute_two_sided(7, serial), brute_two_sided(7, parallel));
}

TEST(Oracle, DoubleCount) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(double_count_check(n).ok) << n;
}

TEST(Oracle, ThetaIdentity) {
  for (int n = 1; n <= 7; ++n) EXPECT_TRUE(theta_identity_check(n).ok) << n;
}

TEST(Oracle, AltDesMatchesThreeDescents) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(equidistribution_check(n).ok) << n;
}
