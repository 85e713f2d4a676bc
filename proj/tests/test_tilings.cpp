#include "fibfractal/tilings.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

namespace fibfractal {
namespace {

std::set<std::string> names(const std::vector<Tiling>& tilings) {
  std::set<std::string> out;
  for (const auto& t : tilings) out.insert(t.to_string());
  return out;
}

BoxedPartition boxed(std::vector<std::uint32_t> parts, std::uint32_t rows, std::uint32_t cols) {
  return BoxedPartition(Partition(std::move(parts)), rows, cols);
}

TEST(Tiling, ParseAndLength) {
  const Tiling t = Tiling::parse("MDM");
  EXPECT_EQ(t.length(), 4U);
  EXPECT_EQ(t.to_string(), "MDM");
  EXPECT_THROW(Tiling::parse("MX"), std::invalid_argument);
  EXPECT_EQ(Tiling().length(), 0U);
}

TEST(EnumerateTilings, Examples) {
  EXPECT_EQ(names(enumerate_tilings(3)), (std::set<std::string>{"MMM", "DM", "MD"}));
  EXPECT_EQ(enumerate_tilings(0).size(), 1U);
  EXPECT_EQ(enumerate_tilings(5).size(), 8U);
}

TEST(EnumerateTilings, CountsAreFibonacciAndDistinct) {
  const auto f = oracle::fib_sequence(22);
  for (std::size_t n = 0; n <= 20; ++n) {
    const auto all = enumerate_tilings(n);
    EXPECT_EQ(Natural(all.size()), f[n + 1]) << n;
    EXPECT_EQ(names(all).size(), all.size());
    for (const auto& t : all) EXPECT_EQ(t.length(), n);
  }
}

TEST(Iota, SmallCases) {
  EXPECT_EQ(iota(Tiling::parse("MM")), Tiling::parse("D"));
  EXPECT_EQ(iota(Tiling::parse("D")), Tiling::parse("MM"));
  EXPECT_EQ(iota(Tiling::parse("MMM")), Tiling::parse("DM"));
  EXPECT_EQ(iota(Tiling::parse("DM")), Tiling::parse("MMM"));
  EXPECT_EQ(iota(Tiling::parse("MD")), Tiling::parse("MD"));
  // Row of 8: MD MM MD <-> MD D MD.
  EXPECT_EQ(iota(Tiling::parse("MDMMMD")), Tiling::parse("MDDMD"));
  // A fixed point for a row of 7.
  EXPECT_EQ(iota(Tiling::parse("MDMDM")), Tiling::parse("MDMDM"));
}

TEST(Iota, InvolutionWithPredictedFixedPoints) {
  for (std::size_t n = 0; n <= 15; ++n) {
    std::size_t fixed = 0;
    for (const auto& t : enumerate_tilings(n)) {
      const Tiling image = iota(t);
      ASSERT_EQ(image.length(), n);
      ASSERT_EQ(iota(image), t) << t.to_string();
      if (image == t) ++fixed;
    }
    EXPECT_EQ(fixed, n % 3 == 2 ? 0U : 1U) << n;
  }
}

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_NO_THROW(Partition({3, 2, 2, 2}));
  EXPECT_THROW(boxed({3, 2}, 1, 5), std::invalid_argument);
  EXPECT_THROW(boxed({6}, 2, 5), std::invalid_argument);
}

TEST(EnumeratePartitionsInBox, Examples) {
  const auto zero_rows = enumerate_partitions_in_box(0, 4);
  ASSERT_EQ(zero_rows.size(), 1U);
  EXPECT_TRUE(zero_rows[0].partition().empty());

  const auto one_by_two = enumerate_partitions_in_box(1, 2);
  ASSERT_EQ(one_by_two.size(), 3U);
  EXPECT_EQ(enumerate_partitions_in_box(2, 2).size(), 6U);
}

TEST(EnumeratePartitionsInBox, CountIsBinomial) {
  for (std::uint32_t c = 0; c <= 7; ++c)
    for (std::uint32_t d = 0; d <= 7; ++d)
      EXPECT_EQ(Natural(enumerate_partitions_in_box(c, d).size()), binomial(c + d, c)) << c << 'x' << d;
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(boxed({3, 2, 2, 2}, 4, 5)), Partition({4, 4, 3}));
  EXPECT_EQ(complement(boxed({}, 3, 4)), Partition({3, 3, 3, 3}));
  EXPECT_TRUE(complement(boxed({4, 4, 4}, 3, 4)).empty());
}

TEST(Complement, CellsPartitionTheBox) {
  for (const auto& bp : enumerate_partitions_in_box(5, 6)) {
    std::uint32_t cells = 0;
    for (auto p : bp.partition().parts()) cells += p;
    for (auto c : complement(bp).parts()) cells += c;
    EXPECT_EQ(cells, 30U);
  }
}

TEST(CountWeighted, Examples) {
  EXPECT_EQ(count_weighted(boxed({}, 0, 0)), Natural(1U));
  EXPECT_EQ(count_weighted(boxed({3, 2, 2, 2}, 4, 5)), Natural(96U));
  EXPECT_EQ(count_weighted(boxed({}, 1, 3)), Natural(0U));  // three columns of length 1
}

TEST(CountWeighted, MatchesEnumerationOnSmallBoxes) {
  for (std::uint32_t c = 0; c <= 4; ++c)
    for (std::uint32_t d = 0; d <= 4; ++d)
      for (const auto& bp : enumerate_partitions_in_box(c, d))
        EXPECT_EQ(count_weighted(bp), Natural(enumerate_rect_tilings(bp).size()));
}

TEST(SaganSavage, Examples) {
  for (Index n = 0; n <= 10; ++n) EXPECT_EQ(sagan_savage_count(n, 0), Natural(1U));
  EXPECT_EQ(sagan_savage_count(3, 1), Natural(2U));
  EXPECT_EQ(sagan_savage_count(6, 3), Natural(60U));
  EXPECT_THROW(sagan_savage_count(2, 3), std::invalid_argument);
}

TEST(SaganSavage, EnumeratedCountMatchesFibonomial) {
  for (Index n = 0; n <= 7; ++n)
    for (Index k = 0; k <= n; ++k)
      EXPECT_EQ(sagan_savage_count_enumerated(n, k), fibonomial(n, static_cast<std::int64_t>(k)));
}

TEST(ExtendedIota, IsAnInvolutionWhoseFixedPointsFollowTheCriterion) {
  for (Index n = 0; n <= 8; ++n) {
    for (Index k = 0; k <= n; ++k) {
      for (const auto& bp :
           enumerate_partitions_in_box(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n - k))) {
        std::size_t fixed = 0;
        for (const auto& r : enumerate_rect_tilings(bp)) {
          const RectTiling image = extended_iota(r);
          ASSERT_EQ(extended_iota(image), r);
          if (image == r) ++fixed;
        }
        EXPECT_EQ(fixed, satisfies_fixed_point_criterion(bp) ? 1U : 0U);
      }
    }
  }
}

TEST(ExtendedIota, RejectsColumnsWithoutLeadingDomino) {
  RectTiling bad{{}, {Tiling::parse("MD")}};
  EXPECT_THROW(extended_iota(bad), std::invalid_argument);
}

TEST(LatticeFixedPoints, Examples) {
  EXPECT_EQ(lattice_fixed_points(3, 1), Natural(0U));
  EXPECT_EQ(lattice_fixed_points(4, 1), Natural(1U));
  for (Index n = 0; n <= 20; ++n) EXPECT_EQ(lattice_fixed_points(n, 0), Natural(1U));
}

TEST(LatticeLemmaRhs, Examples) {
  EXPECT_EQ(lattice_lemma_rhs(3, 1), Natural(0U));
  EXPECT_EQ(lattice_lemma_rhs(4, 3), Natural(3U));
  EXPECT_EQ(lattice_lemma_rhs(5, 2), Natural(3U));
}

TEST(LatticeFixedPoints, CountsFixedPartitions) {
  for (Index n = 0; n <= 12; ++n) {
    for (Index k = 0; k <= n; ++k) {
      std::uint64_t fixed = 0;
      for (const auto& bp : enumerate_partitions_in_box(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n - k)))
        if (satisfies_fixed_point_criterion(bp)) ++fixed;
      EXPECT_EQ(lattice_fixed_points(n, k), Natural(fixed)) << n << ' ' << k;
    }
  }
}

}  // namespace
}  // namespace fibfractal
