#include <gtest/gtest.h>

#include "altdes/errors.hpp"
#include "altdes/gamma.hpp"
#include "altdes/oracle.hpp"
#include "altdes/recurrences.hpp"
#include "altdes/shape.hpp"
#include "golden.hpp"

using namespace altdes;
using golden::poly;

TEST(SimsunRelation, Holds) {
  for (int n = 1; n <= 12; ++n) EXPECT_TRUE(simsun_relation_check(n)) << n;
}

TEST(GammaPipeline, ExpandMatchesRecursion) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(gamma_expand(five_term(n), n).as_polynomial(), gamma_rec(n)) << n;
}

TEST(GammaPipeline, LinearCoefficient) {
  const auto e = zigzag_numbers(13);
  for (int n = 3; n <= 12; ++n) {
    const auto i = static_cast<std::size_t>(n);
    EXPECT_EQ(gamma_rec(n)[1], Integer(n) * e[i] - e[i + 1]) << n;
  }
}

TEST(CdIndex, Transforms) {
  for (int n = 1; n <= 6; ++n) {
    const CdIndexOracle cd = brute_cd_index(n);
    const CdTransform tr = cd_transform(cd.phi);
    EXPECT_EQ(cd_to_ab(cd.phi), cd.psi) << n;
    EXPECT_EQ(cd_to_ab(tr.phi_hat), cd.psi_hat) << n;
    EXPECT_EQ(tr.alt_poly, five_term(n)) << n;
  }
}

TEST(CdIndex, GammaEvaluation) {
  for (int n = 1; n <= 7; ++n) {
    const CdIndexOracle cd = brute_cd_index(n);
    const IntPoly g = cd_gamma_polynomial(cd.phi);
    EXPECT_EQ(g, gamma_rec(n)) << n;
    const IntPoly hat_at_minus_x = cd_transform(cd.phi).phi_hat.evaluate_commutative({{'c', poly({1})}, {'d', poly({0, -1})}});
    EXPECT_EQ(g, hat_at_minus_x) << n;
  }
}

TEST(CdIndex, HatAtOnePlusXIsNotTheGammaVector) {
  const NCPoly phi_hat = cd_transform(brute_cd_index(5).phi).phi_hat;
  EXPECT_NE(phi_hat.evaluate_commutative({{'c', poly({1})}, {'d', poly({1, 1})}}), gamma_rec(5));
}

TEST(QGamma, Table) {
  const auto want = golden::q_gamma_table();
  const auto qalt = quadratic_tq_table(8);
  for (int n = 2; n <= 8; ++n) {
    const QGammaVector g = q_gamma_extract(qalt[static_cast<std::size_t>(n)], n);
    const auto& row = want[static_cast<std::size_t>(n - 2)];
    ASSERT_EQ(g.gammas.size(), row.size()) << n;
    for (std::size_t k = 0; k < row.size(); ++k) EXPECT_EQ(g.gammas[k], row[k]) << n << "," << k;
    EXPECT_EQ(g.reconstruct(), qalt[static_cast<std::size_t>(n)]) << n;
    EXPECT_TRUE(g.verdicts_pass()) << n;
  }
}

TEST(QGamma, HalvedEightThreeMissesFactorial) {
  // At t = q = 1 the expansion must sum to 8!.
  auto total = [](const std::vector<IntPoly>& g) {
    Integer sum = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      Integer term = g[k].evaluate(1) * Integer(1 << (7 - 2 * k));
      sum += (k % 2 == 0) ? term : Integer(-term);
    }
    return sum;
  };
  auto row = golden::q_gamma_table().back();
  EXPECT_EQ(total(row), 40320);
  row[3] = exact_div(row[3], poly({2}));
  EXPECT_EQ(total(row), 44288);
}

TEST(QGamma, AtQOneIsGammaVector) {
  const auto qalt = quadratic_tq_table(10);
  for (int n = 1; n <= 10; ++n) {
    const QGammaVector g = q_gamma_extract(qalt[static_cast<std::size_t>(n)], n);
    const IntPoly a = gamma_rec(n);
    for (std::size_t k = 0; k < g.gammas.size(); ++k) {
      EXPECT_EQ(g.gammas[k].evaluate(1), a[k] * Integer(1 << k)) << n << "," << k;
    }
  }
}

TEST(QGamma, RejectsNonExpandable) {
  EXPECT_THROW(q_gamma_extract(BiPolyTQ::from_terms({{0, 0, 1}, {1, 0, 1}}), 3), ExpansionFailed);
}

TEST(TwoSided, Table) {
  const auto want = golden::two_sided_table();
  for (int n = 2; n <= 5; ++n) {
    const TwoSidedGamma g = two_sided_extract(brute_two_sided(n), n);
    std::map<std::pair<int, int>, Integer> expect;
    for (const auto& [key, v] : want[static_cast<std::size_t>(n - 2)]) expect[key] = v;
    EXPECT_EQ(g.entries, expect) << n;
  }
}

TEST(TwoSided, SingleFactorFiveTermSumsDiffer) {
  // The expansion evaluated at s = t = 1 must give 5! = 120; a single
  // -14st(1+st) term would give 148.
  const TwoSidedGamma g = two_sided_extract(brute_two_sided(5), 5);
  EXPECT_EQ(g.reconstruct().at_q_one().sum_of_coefficients(), 120);
  TwoSidedGamma misprint = g;
  misprint.entries.erase({1, 2});
  const BiPolyTQ extra = BiPolyTQ::from_terms({{1, 1, -14}, {2, 2, -14}});
  EXPECT_EQ((misprint.reconstruct() + extra).at_q_one().sum_of_coefficients(), 148);
}

TEST(TwoSided, RoundTripAndSign) {
  for (int n = 1; n <= 8; ++n) {
    const BiPolyTQ a = brute_two_sided(n);
    const TwoSidedGamma g = two_sided_extract(a, n);
    EXPECT_EQ(g.reconstruct(), a) << n;
    EXPECT_TRUE(g.all_nonnegative()) << n;
  }
}

TEST(TwoSided, RejectsAsymmetric) {
  EXPECT_THROW(two_sided_extract(BiPolyTQ::from_terms({{1, 0, 1}}), 2), ExpansionFailed);
}

TEST(DownUpSimsun, Counts) {
  EXPECT_EQ(down_up_simsun_count(2), 1);
  EXPECT_EQ(down_up_simsun_count(4), 4);
  EXPECT_EQ(down_up_simsun_count(6), 34);
}
