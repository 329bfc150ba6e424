#include <gtest/gtest.h>

#include <numeric>

#include "jacring/oracles.hpp"
#include "oracles_naive.hpp"

using namespace jacring;

TEST(Dyck, SmallPairs) {
  EXPECT_EQ(dyck_poly(2, 3), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(dyck_poly(3, 4), (std::vector<std::size_t>{1, 1, 2, 1}));
}

TEST(Dyck, AgreesWithCellEnumeration) {
  for (int p = 2; p <= 8; ++p)
    for (int q = p + 1; q <= 13; ++q) {
      if (std::gcd(p, q) != 1) continue;
      EXPECT_EQ(dyck_poly(p, q), naive::dyck(p, q)) << p << "," << q;
    }
}

TEST(Dyck, TotalIsCatalan) {
  for (int p = 2; p <= 12; ++p)
    for (int q = p + 1; p + q <= 13; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto d = dyck_poly(p, q);
      auto total = std::accumulate(d.begin(), d.end(), std::size_t{0});
      EXPECT_EQ(Integer(static_cast<unsigned long>(total)), catalan_count(p, q));
    }
}

TEST(Catalan, Values) {
  EXPECT_EQ(catalan_count(2, 3), 2);
  EXPECT_EQ(catalan_count(3, 4), 5);
  EXPECT_EQ(catalan_count(4, 7), 30);
  for (int p = 2; p <= 9; ++p) EXPECT_EQ(catalan_count(p, p + 1), naive::choose(2 * p, p) / (p + 1));
}

TEST(ClosedSeries, TwoThree) {
  auto s = closed_hilbert_series(2, 3, 2);
  EXPECT_EQ(s, (std::vector<Integer>{1, 0, 1}));
}

TEST(ClosedSeries, SumAndSymmetry) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {5, 7}, {3, 10}}) {
    const int top = (p - 1) * (q - 1);
    auto s = closed_hilbert_series(p, q, top + 4);
    Integer total = 0;
    for (auto& c : s) total += c;
    EXPECT_EQ(total, catalan_count(p, q));
    for (int j = 0; j <= top; ++j) EXPECT_EQ(s[j], s[top - j]);
    for (int j = top + 1; j <= top + 4; ++j) EXPECT_EQ(s[j], 0);
    EXPECT_EQ(s, naive::hilbert_closed(p, q, top + 4));
  }
}
