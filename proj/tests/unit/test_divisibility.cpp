#include <gtest/gtest.h>

#include "altdes/divisibility.hpp"
#include "altdes/errors.hpp"
#include "altdes/oracle.hpp"
#include "altdes/permutation.hpp"
#include "golden.hpp"

using namespace altdes;
using golden::one_plus;
using golden::poly;

TEST(Cyclotomic, Small) {
  EXPECT_EQ(cyclotomic(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic(6), poly({1, -1, 1}));
  EXPECT_EQ(cyclotomic(2) * cyclotomic(6), one_plus(3));
  EXPECT_THROW(cyclotomic(0), std::invalid_argument);
}

TEST(Cyclotomic, ProductOverDivisors) {
  for (int n = 1; n <= 30; ++n) {
    IntPoly prod = poly({1});
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) prod *= cyclotomic(d);
    }
    EXPECT_EQ(prod, IntPoly::monomial(1, static_cast<std::size_t>(n)) - poly({1})) << n;
  }
}

TEST(Gn, Examples) {
  EXPECT_EQ(build_Gn(1), poly({1}));
  EXPECT_EQ(build_Gn(4), one_plus(1).pow(2) * one_plus(2));
  EXPECT_EQ(build_Gn(8), one_plus(1).pow(3) * one_plus(2).pow(2) * one_plus(3) * one_plus(4));
}

TEST(Gn, MethodsAgree) {
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(build_Gn(n, ProductMethod::Product), build_Gn(n, ProductMethod::Cyclotomic)) << n;
  }
}

TEST(Gn, EvenOddAndEvProduct) {
  IntPoly ev_prod = poly({1});
  for (int n = 1; n <= 8; ++n) {
    ev_prod *= build_Ev(n);
    EXPECT_EQ(build_Gn(2 * n), build_Gn(2 * n + 1)) << n;
    EXPECT_EQ(build_Gn(2 * n), ev_prod) << n;
  }
}

TEST(Ev, Examples) {
  EXPECT_EQ(build_Ev(1), one_plus(1));
  EXPECT_EQ(build_Ev(2), one_plus(1) * one_plus(2));
  EXPECT_EQ(build_Ev(3), one_plus(3));
  EXPECT_EQ(build_Ev(3, ProductMethod::Cyclotomic), cyclotomic(2) * cyclotomic(6));
  for (int k = 1; k <= 16; ++k) {
    EXPECT_EQ(build_Ev(k, ProductMethod::Product), build_Ev(k, ProductMethod::Cyclotomic)) << k;
  }
}

TEST(OnePlusFactor, CyclotomicDecomposition) {
  for (int m = 1; m <= 24; ++m) {
    IntPoly prod = poly({1});
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0 && m % (2 * d) != 0) prod *= cyclotomic(2 * d);
    }
    EXPECT_EQ(prod, one_plus(static_cast<std::size_t>(m))) << m;
  }
}

TEST(OrderOfFactor, Examples) {
  EXPECT_EQ(order_of_factor(q_pochhammer(4), 1), 2);
  EXPECT_EQ(order_of_factor(q_pochhammer(9), 2), 2);
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(order_of_factor(poly({1}), m), 0);
  EXPECT_THROW(order_of_factor(IntPoly(), 1), std::invalid_argument);
}

TEST(OrderOfFactor, PochhammerOrders) {
  for (int n = 1; n <= 20; ++n) {
    const IntPoly f = q_pochhammer(n);
    for (int m = 1; m <= n; ++m) {
      const int r = n / (2 * m);
      EXPECT_EQ(order_of_factor(f, m), r) << n << "," << m;
      EXPECT_FALSE(try_exact_div(f, one_plus(static_cast<std::size_t>(m)).pow(static_cast<unsigned>(r + 1))).has_value());
    }
  }
}

TEST(OnePlusDivides, IffOddQuotient) {
  for (int m = 1; m <= 24; ++m) {
    for (int n = 1; n <= 24; ++n) EXPECT_EQ(one_plus_divides(m, n), quotient_is_odd(m, n)) << m << "," << n;
  }
}

TEST(Factorization, GoldenList) {
  const auto altmaj = golden::altmaj_factored();
  const auto ehat = golden::ehat();
  for (int n = 2; n <= 8; ++n) {
    const auto i = static_cast<std::size_t>(n - 2);
    EXPECT_EQ(altmaj_polynomial(n, AltMajSource::FaaDiBruno), altmaj[i]) << n;
    EXPECT_EQ(altmaj_polynomial(n, AltMajSource::Quadratic), altmaj[i]) << n;
    const Factorization f = extract_Ehat(n);
    EXPECT_EQ(f.e_hat, ehat[i]) << n;
    EXPECT_EQ(f.g_n * f.e_hat, altmaj[i]) << n;
  }
}

TEST(Factorization, Verdicts) {
  for (int n = 2; n <= 20; ++n) {
    const Factorization f = extract_Ehat(n);
    EXPECT_TRUE(f.verdicts.e_hat_palindromic) << n;
    EXPECT_TRUE(f.verdicts.constant_term_is_euler) << n;
  }
  EXPECT_EQ(extract_Ehat(8).e_hat[0], 1385);
  EXPECT_THROW(extract_Ehat(1), std::invalid_argument);
}

TEST(EulerNumbers, FirstNine) {
  const auto e = euler_numbers(8);
  const auto want = golden::euler();
  ASSERT_EQ(e.size(), want.size());
  for (std::size_t i = 0; i < e.size(); ++i) EXPECT_EQ(e[i], want[i]) << i;
}

TEST(Thm42, Examples) {
  const Thm42Report four = check_thm42(4);
  EXPECT_TRUE(four.finding.ok);
  EXPECT_GE(four.rows.at(0).order, 2);
  const Thm42Report eight = check_thm42(8);
  EXPECT_GE(eight.rows.at(3).order, 1);
  EXPECT_EQ(check_thm42(2).rows.at(0).order, 1);
  for (int n = 2; n <= 16; ++n) EXPECT_TRUE(check_thm42(n).finding.ok) << n;
}

TEST(Parity, Requirement) {
  EXPECT_EQ(parity_requirement(5, 0), 2);
  EXPECT_EQ(parity_requirement(5, 1), 2);
  EXPECT_EQ(parity_requirement(6, 0), 3);
  EXPECT_EQ(parity_requirement(6, 1), 2);
  EXPECT_EQ(parity_requirement(6, 2), 3);
}

TEST(Parity, Tables) {
  const ParityTable sub = parity_table_substituted(10, 4);
  EXPECT_TRUE(sub.finding.ok) << sub.finding.witness;
  const ParityTable spec = parity_table_specialized(10, 4);
  EXPECT_TRUE(spec.finding.ok) << spec.finding.witness;
  EXPECT_TRUE(spec.sources_agree);
  EXPECT_EQ(sub.cells.size(), 50U);
}

TEST(BinomialCriterion, Examples) {
  EXPECT_TRUE(binomial_criterion(stat_multiset(4, Statistic::AltMaj), 1, 2));
  EXPECT_TRUE(binomial_criterion(stat_multiset(2, Statistic::AltMaj), 1, 1));
  StatMultiset lopsided;
  lopsided.values = {{0, 2}};
  EXPECT_FALSE(binomial_criterion(lopsided, 1, 1));
}

TEST(Conj410, SmallRange) {
  for (int n = 2; n <= 9; ++n) {
    const Conj410Report r = verify_conj410(n);
    EXPECT_TRUE(r.finding.ok) << n << " " << r.finding.witness;
    for (const auto& row : r.rows) EXPECT_TRUE(row.sound);
  }
}

TEST(Thm411, Worked) {
  const Permutation p = Permutation::parse("942357861");
  const int before = alt_stats(p).altmaj;
  const int after = alt_stats(reverse_prefix(p, 3)).altmaj;
  EXPECT_EQ(before, 18);
  EXPECT_EQ(after, 15);
  EXPECT_EQ(((after - before - 3) % 6 + 6) % 6, 0);
}

TEST(Thm411, Bijection) {
  EXPECT_TRUE(thm411_bijection_check(2, 1).ok);
  for (int m = 1; m <= 4; ++m) EXPECT_TRUE(thm411_bijection_check(8, m).ok) << m;
  EXPECT_THROW(thm411_bijection_check(5, 3), PrefixTooLong);
}
