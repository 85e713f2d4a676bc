#include "fibfractal/congruence.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace fibfractal {
namespace {

Residue lucas(std::uint64_t n, std::uint64_t k, std::uint64_t p) { return lucas_binomial_mod_p(Natural(n), Natural(k), p); }

TEST(Residue, Invariants) {
  EXPECT_THROW(Residue(3, 3), std::invalid_argument);
  EXPECT_THROW(Residue(0, 1), std::invalid_argument);
  EXPECT_EQ(Residue::reduce(7, 3), Residue(1, 3));
  EXPECT_EQ(Residue(2, 3).balanced(), -1);
  EXPECT_EQ(Residue(1, 3).balanced(), 1);
  EXPECT_EQ(Residue(0, 3).balanced(), 0);
  EXPECT_EQ(-Residue(1, 3), Residue(2, 3));
  EXPECT_EQ(-Residue(0, 3), Residue(0, 3));
  EXPECT_EQ(Residue(2, 3) * Residue(2, 3), Residue(1, 3));
  EXPECT_THROW(Residue(1, 2) * Residue(1, 3), std::invalid_argument);
}

TEST(LucasBinomial, Examples) {
  EXPECT_EQ(lucas(5, 2, 2).value(), 0U);
  EXPECT_EQ(lucas(7, 3, 2).value(), 1U);
  for (std::uint64_t n = 0; n < 50; ++n) EXPECT_EQ(lucas(n, 0, 5).value(), 1U);
  EXPECT_EQ(lucas(3, 5, 7).value(), 0U);
}

TEST(LucasBinomial, MatchesExactBinomials) {
  const auto rows = oracle::pascal_rows(300);
  for (std::uint64_t p : {2U, 3U, 5U})
    for (std::uint64_t n = 0; n <= 300; ++n)
      for (std::uint64_t k = 0; k <= n; ++k) ASSERT_EQ(lucas(n, k, p).value(), rows[n][k].mod(p)) << n << ' ' << k << ' ' << p;
}

TEST(LucasBinomial, LargerPrime) {
  for (std::uint64_t n = 0; n <= 400; n += 7)
    for (std::uint64_t k = 0; k <= n; k += 3) ASSERT_EQ(lucas(n, k, 101).value(), binomial(n, static_cast<std::int64_t>(k)).mod(101));
}

TEST(KummerNu, Examples) {
  EXPECT_EQ(kummer_nu(Natural(1U), Natural(1U), 2), 1U);
  EXPECT_EQ(kummer_nu(Natural(3U), Natural(1U), 2), 2U);
  for (std::uint64_t m = 0; m < 40; ++m) EXPECT_EQ(kummer_nu(Natural(m), Natural(0U), 3), 0U);
}

TEST(KummerNu, MatchesValuationOfBinomial) {
  const auto rows = oracle::pascal_rows(300);
  for (std::uint64_t p : {2U, 3U, 5U})
    for (std::uint64_t total = 0; total <= 300; ++total)
      for (std::uint64_t m = 0; m <= total; ++m)
        ASSERT_EQ(kummer_nu(Natural(m), Natural(total - m), p), oracle::valuation(rows[total][m].value(), p))
            << m << " + " << total - m << " base " << p;
}

TEST(KnuthWilf, Examples) {
  EXPECT_EQ(knuth_wilf_nu2_fibonomial(Natural(3U), Natural(3U)), 2U);
  EXPECT_EQ(knuth_wilf_nu2_fibonomial(Natural(1U), Natural(5U)), 3U);
  EXPECT_EQ(knuth_wilf_nu2_fibonomial(Natural(1U), Natural(2U)), 1U);
  EXPECT_EQ(knuth_wilf_nu2_fibonomial(Natural(2U), Natural(4U)), 3U);
  for (std::uint64_t m = 0; m < 60; ++m) EXPECT_EQ(knuth_wilf_nu2_fibonomial(Natural(m), Natural(0U)), 0U);
}

TEST(KnuthWilf, MatchesExactValuation) {
  for (std::uint64_t total = 0; total <= 300; ++total)
    for (std::uint64_t m = 0; m <= total; ++m)
      ASSERT_EQ(knuth_wilf_nu2_fibonomial(Natural(m), Natural(total - m)),
                oracle::valuation(fibonomial(total, static_cast<std::int64_t>(m)).value(), 2))
          << m << " + " << total - m;
}

TEST(KnuthWilf, MatchesValuationSumsForLargeArguments) {
  const FibonacciValuationTable table(1'000'000);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5000; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(0, 1'000'000)(rng);
    const Index k = std::uniform_int_distribution<Index>(0, n)(rng);
    ASSERT_EQ(knuth_wilf_nu2_fibonomial(Natural(k), Natural(n - k)), table.nu2_fibonomial(n, k)) << n << ' ' << k;
  }
}

TEST(LucasFibonomialMod2, Examples) {
  EXPECT_EQ(lucas_fibonomial_mod2(Natural(3U), Natural(1U)).value(), 0U);
  EXPECT_EQ(lucas_fibonomial_mod2(Natural(5U), Natural(2U)).value(), 1U);
  for (std::uint64_t n = 0; n < 100; ++n) EXPECT_EQ(lucas_fibonomial_mod2(Natural(n), Natural(0U)).value(), 1U);
}

TEST(LucasFibonomialMod2, DenseAgreementWithExact) {
  for (std::uint64_t n = 0; n <= 300; ++n)
    for (std::uint64_t k = 0; k <= n + 3; ++k)
      ASSERT_EQ(lucas_fibonomial_mod2(Natural(n), Natural(k)).value(), fibonomial_mod(n, static_cast<std::int64_t>(k), 2))
          << n << ' ' << k;
}

TEST(LucasFibonomialMod2, RandomAgreementUpToAThousand) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(301, 1000)(rng);
    const Index k = std::uniform_int_distribution<Index>(0, n)(rng);
    ASSERT_EQ(lucas_fibonomial_mod2(Natural(n), Natural(k)).value(), fibonomial_via_quotient(n, k).mod(2)) << n << ' ' << k;
  }
}

TEST(LucasFibonomialMod2, ShiftInvarianceAtHugeLevels) {
  const Natural shift = Natural(3U) * pow(Natural(2U), 150);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const Natural n(rng() % 100000), k(rng() % 100000);
    EXPECT_EQ(lucas_fibonomial_mod2(n + shift, k), lucas_fibonomial_mod2(n, k));
  }
}

TEST(FibonomialMod3Fast, Examples) {
  EXPECT_EQ(fibonomial_mod3_fast(Natural(3U), Natural(1U)).value(), 2U);
  EXPECT_EQ(fibonomial_mod3_fast(Natural(4U), Natural(2U)).value(), 0U);
  EXPECT_EQ(fibonomial_mod3_fast(Natural(11U), Natural(5U)).value(), 2U);
  EXPECT_EQ(fibonomial_mod3_fast(Natural(11U), Natural(12U)).value(), 0U);
}

TEST(FibonomialMod3Fast, AgreesWithExactThrough324) {
  for (std::uint64_t n = 0; n <= 324; ++n)
    for (std::uint64_t k = 0; k <= n; ++k)
      ASSERT_EQ(fibonomial_mod3_fast(Natural(n), Natural(k)).value(), fibonomial_mod(n, static_cast<std::int64_t>(k), 3))
          << n << ' ' << k;
}

TEST(FibonomialMod3Fast, RandomAgreementUpToAThousand) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(325, 1000)(rng);
    const Index k = std::uniform_int_distribution<Index>(0, n)(rng);
    ASSERT_EQ(fibonomial_mod3_fast(Natural(n), Natural(k)).value(), fibonomial_via_quotient(n, k).mod(3)) << n << ' ' << k;
  }
}

TEST(FibonomialMod3Fast, HugeRowsAreSymmetric) {
  const Natural n = pow(Natural(10U), 40) + Natural(12345U);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Natural k(rng() % 1000000);
    EXPECT_EQ(fibonomial_mod3_fast(n, k), fibonomial_mod3_fast(n, n - k));
  }
}

TEST(VerifySelfSimilarityMod2, CellCounts) {
  for (std::uint64_t m = 0; m <= 2; ++m) {
    const auto report = verify_self_similarity_mod2(m);
    const std::uint64_t side = 3ULL << m;
    EXPECT_EQ(report.cells_checked, side * side);
    EXPECT_TRUE(report.verified());
    EXPECT_EQ(report.section_cells("right copy"), side * (side + 1) / 2);
    EXPECT_EQ(report.section_cells("zero triangle"), side * (side - 1) / 2);
  }
  EXPECT_EQ(verify_self_similarity_mod2(0).cells_checked, 9U);
  EXPECT_EQ(verify_self_similarity_mod2(1).cells_checked, 36U);
  EXPECT_EQ(verify_self_similarity_mod2(2).cells_checked, 144U);
}

TEST(VerifySelfSimilarityMod2, ZeroMiddleTriangleThroughLevelFive) {
  for (std::uint64_t m = 0; m <= 5; ++m) {
    const Index side = 3ULL << m;
    for (Index n = 0; n < side; ++n)
      for (Index k = n + 1; k < side; ++k)
        ASSERT_EQ(fibonomial_mod(n + side, static_cast<std::int64_t>(k), 2), 0U) << m << ' ' << n << ' ' << k;
  }
}

TEST(VerifyPascalMod2, Examples) {
  EXPECT_EQ(verify_pascal_mod2(0).cells_checked, 1U);
  const auto r2 = verify_pascal_mod2(2);
  EXPECT_EQ(r2.cells_checked, 16U);
  EXPECT_TRUE(r2.verified());
}

TEST(VerifySelfSimilarityMod3, LevelZeroAndOne) {
  const auto r0 = verify_self_similarity_mod3(0);
  EXPECT_TRUE(r0.verified());
  EXPECT_EQ(r0.section_cells("congruence 1"), 16U);
  EXPECT_EQ(r0.section_cells("congruence 2"), 16U);
  EXPECT_EQ(r0.section_cells("congruence 3"), 16U);
  EXPECT_EQ(r0.cells_checked, 48U);
  // Rows 4..11 hold 8 + ... + 12 cells; the congruences cover 4*4 + 4*8 of them.
  EXPECT_EQ(r0.section_cells("symmetry"), (5 + 12) * 8 / 2 - 16 - 32);
  EXPECT_TRUE(verify_self_similarity_mod3(1).verified());
}

TEST(SelfSimilarityReport, MismatchesAreReportedNotThrown) {
  SelfSimilarityReport report;
  EXPECT_TRUE(report.verified());
  report.mismatches.push_back({"x", 1, 2, 0, 1});
  EXPECT_FALSE(report.verified());
  EXPECT_EQ(report.section_cells("missing"), 0U);
}

TEST(SignExperiment, Properties) {
  const auto rows = mod3_sign_experiment(40);
  EXPECT_EQ(rows.size(), 41U * 42U / 2U);
  for (const auto& row : rows) {
    EXPECT_NE(row.sign, SignClass::neither) << row.n << ' ' << row.k;
    if (row.product == 0) {
      EXPECT_EQ(row.lhs, 0U);
      EXPECT_EQ(row.sign, SignClass::both);
    }
    if (row.k == 0) {
      EXPECT_EQ(row.lhs, 1U);
      EXPECT_EQ(row.product, 1U);
      EXPECT_EQ(row.sign, SignClass::plus);
    }
  }
}

TEST(SignExperiment, BothSignsOccur) {
  bool plus = false, minus = false;
  for (const auto& row : mod3_sign_experiment(40)) {
    plus |= row.sign == SignClass::plus;
    minus |= row.sign == SignClass::minus;
  }
  EXPECT_TRUE(plus);
  EXPECT_TRUE(minus);
}

}  // namespace
}  // namespace fibfractal
