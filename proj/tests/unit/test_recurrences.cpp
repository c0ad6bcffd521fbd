#include <gtest/gtest.h>

#include "altdes/errors.hpp"
#include "altdes/oracle.hpp"
#include "altdes/recurrences.hpp"
#include "golden.hpp"

using namespace altdes;
using golden::poly;

TEST(FiveTerm, Golden) {
  const auto want = golden::alt_eulerian();
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(five_term(n), want[static_cast<std::size_t>(n - 1)]) << n;
  EXPECT_EQ(five_term_table(3).front(), poly({1}));
}

TEST(FiveTerm, MatchesOracle) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(five_term(n), brute_alt_eulerian(n)) << n;
}

TEST(FiveTerm, RowSumsAreFactorials) {
  Integer fact = 1;
  for (int n = 1; n <= 25; ++n) {
    fact *= n;
    EXPECT_EQ(five_term(n).sum_of_coefficients(), fact) << n;
  }
}

TEST(Chebikin, Holds) {
  for (int n : {1, 2, 5, 10}) EXPECT_TRUE(chebikin_check(n).ok) << n;
}

TEST(Quadratic, MatchesOracle) {
  const auto table = quadratic_tq_table(8);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(table[static_cast<std::size_t>(n)], brute_qalt(n)) << n;
    EXPECT_EQ(table[static_cast<std::size_t>(n)].at_q_one(), five_term(n)) << n;
  }
}

TEST(Quadratic, SpecializedAgrees) {
  const auto table = quadratic_tq_table(9);
  const auto spec = specialized_qalt_table(9, 4);
  for (std::size_t n = 0; n <= 9; ++n) {
    for (std::size_t j = 0; j <= 4; ++j) EXPECT_EQ(spec[n][j], table[n].at_t_power(j)) << n << "," << j;
  }
}

TEST(Simsun, MethodsAgreeWithOracle) {
  const auto deriv = simsun_table(9, SimsunMethod::Derivative);
  const auto quad = simsun_table(9, SimsunMethod::Quadratic);
  for (int n = 1; n <= 9; ++n) {
    const auto i = static_cast<std::size_t>(n);
    EXPECT_EQ(deriv[i], quad[i]) << n;
    EXPECT_EQ(deriv[i], brute_simsun(n)) << n;
  }
}

TEST(Simsun, AtOneIsEuler) {
  const auto e = zigzag_numbers(16);
  for (int n = 0; n <= 15; ++n) {
    EXPECT_EQ(simsun_rec(n, SimsunMethod::Derivative).evaluate(1), e[static_cast<std::size_t>(n + 1)]) << n;
  }
}

TEST(GammaRec, Five) { EXPECT_EQ(gamma_rec(5), poly({16, 19, 4})); }

TEST(GammaRec, ConstantIsEuler) {
  const auto e = zigzag_numbers(14);
  for (int n = 1; n <= 14; ++n) EXPECT_EQ(gamma_rec(n)[0], e[static_cast<std::size_t>(n)]) << n;
}

TEST(Zigzag, FirstValues) {
  const auto e = zigzag_numbers(8);
  const auto want = golden::euler();
  ASSERT_EQ(e.size(), want.size());
  for (std::size_t i = 0; i < e.size(); ++i) EXPECT_EQ(e[i], want[i]) << i;
}

TEST(Egf, Orders) {
  for (int order : {1, 5, 8}) EXPECT_TRUE(egf_check(order)) << order;
  EXPECT_EQ(egf_lhs(6), egf_rhs(6));
}

TEST(FaaDiBruno, Small) {
  EXPECT_EQ(faa_di_bruno_altmaj(1), poly({1}));
  EXPECT_EQ(faa_di_bruno_altmaj(2), poly({1, 1}));
}

TEST(FaaDiBruno, MatchesQuadratic) {
  const auto table = quadratic_tq_table(12);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(faa_di_bruno_altmaj(n), table[static_cast<std::size_t>(n)].at_t_one()) << n;
  }
}

TEST(RationalFn, Arithmetic) {
  const RationalFnQ a(poly({1}), {{1, 1}});
  const RationalFnQ b(poly({1}), {{2, 1}});
  // 1/(1-q) + 1/(1-q^2) = (2+q)/(1-q^2) after clearing
  const RationalFnQ want(poly({2, 1}), {{2, 1}});
  EXPECT_EQ(a + b, want);
  RationalFnQ c(poly({1, -1}), {{1, 1}});
  c.reduce();
  EXPECT_TRUE(c.denominator().empty() || c.denominator_poly() == poly({1}));
  EXPECT_EQ(c.numerator(), poly({1}));
}
