#include <gtest/gtest.h>

#include <numeric>

#include "jacring/oracles.hpp"
#include "jacring/semigroup.hpp"
#include "oracles_naive.hpp"

using namespace jacring;

namespace {
std::shared_ptr<const NumericalSemigroup> sg(std::vector<int> g) {
  return std::make_shared<const NumericalSemigroup>(std::move(g));
}
long sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); }
}  // namespace

TEST(Semigroup, GapsOfSmallPairs) {
  EXPECT_EQ(NumericalSemigroup({2, 3}).gaps(), std::vector<int>{1});
  auto g34 = NumericalSemigroup({3, 4});
  EXPECT_EQ(g34.gaps(), (std::vector<int>{1, 2, 5}));
  EXPECT_EQ(g34.delta(), 3);
  EXPECT_EQ(g34.conductor(), 6);
}

TEST(Semigroup, GapsMatchSieve) {
  for (auto gens : std::vector<std::vector<int>>{{4, 6, 7}, {3, 4, 5}, {5, 8}, {6, 7}, {5, 7, 9}}) {
    auto ref = naive::semigroup_gaps(gens);
    NumericalSemigroup g(gens);
    EXPECT_EQ(std::vector<int>(ref.begin(), ref.end()), g.gaps());
  }
}

TEST(Semigroup, RejectsNonCoprimeGenerators) {
  EXPECT_THROW(NumericalSemigroup({4, 6}), std::invalid_argument);
  EXPECT_THROW(NumericalSemigroup({0, 3}), std::invalid_argument);
}

TEST(Semigroup, MinimalGeneration) {
  EXPECT_TRUE(NumericalSemigroup({4, 6, 7}).is_minimally_generated());
  EXPECT_FALSE(NumericalSemigroup({2, 3, 5}).is_minimally_generated());
}

TEST(Modules, CountsForSmallPairs) {
  auto m23 = enumerate_modules(sg({2, 3}));
  ASSERT_EQ(m23.size(), 2u);
  EXPECT_TRUE(m23[0].adjoined_gaps.empty());
  EXPECT_EQ(m23[1].adjoined_gaps, std::vector<int>{1});
  EXPECT_EQ(enumerate_modules(sg({3, 4})).size(), 5u);
}

TEST(Modules, CountEqualsCatalanAndBruteForce) {
  for (int p = 2; p <= 12; ++p)
    for (int q = p + 1; p + q <= 13; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto n = enumerate_modules(sg({p, q})).size();
      EXPECT_EQ(n, naive::module_count({p, q})) << p << "," << q;
      EXPECT_EQ(mpz_class(static_cast<unsigned long>(n)), naive::choose(p + q, p) / (p + q)) << p << "," << q;
    }
  EXPECT_EQ(enumerate_modules(sg({4, 6, 7})).size(), naive::module_count({4, 6, 7}));
}

TEST(Balance, GammaItselfHasShiftZero) {
  auto g = sg({3, 4});
  auto b = balance(GammaModule{g, {}});
  EXPECT_EQ(b.shift, 0);
  EXPECT_EQ(balance_defect(b), 0);
}

TEST(Balance, TwoThreeWithGapAdjoined) {
  auto g = sg({2, 3});
  auto b = balance(GammaModule{g, {1}});
  EXPECT_EQ(balance_defect(b), 0);
  // Balanced: the element missing from Gamma is matched by one extra element.
  int missing = 0, extra = 0;
  for (int n = -10; n <= 10; ++n) {
    missing += g->contains(n) && n >= 0 && !b.contains(n);
    extra += b.contains(n) && !(n >= 0 && g->contains(n));
  }
  EXPECT_EQ(missing, 1);
  EXPECT_EQ(extra, 1);
}

TEST(Balance, BasisSumsOfGamma) {
  auto b = balance(GammaModule{sg({2, 3}), {}});
  EXPECT_EQ(p_basis(b, 2), (std::vector<int>{0, 3}));
  EXPECT_EQ(sum(p_basis(b, 2)), 3);
  EXPECT_EQ(sum(q_basis(b, 3)), 6);
}

TEST(Balance, BasisSumsForAllPairs) {
  for (int p = 2; p <= 12; ++p)
    for (int q = p + 1; p + q <= 13; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (const auto& m : enumerate_modules(sg({p, q}))) {
        auto b = balance(m);
        EXPECT_EQ(sum(p_basis(b, p)), p * q * (p - 1) / 2);
        EXPECT_EQ(sum(q_basis(b, q)), p * q * (q - 1) / 2);
        EXPECT_EQ(normalize(b), m);
      }
    }
}

TEST(SigmaI, TopLevelIsBalancedModules) {
  EXPECT_EQ(enumerate_sigma_i(3, 4, 3).size(), 5u);
  for (const auto& s : enumerate_sigma_i(2, 3, 1)) EXPECT_EQ(balance_defect(s), 1);
  // Brute force: each normalized module with the shift that gives defect 1.
  std::size_t expect = 0;
  for (const auto& m : enumerate_modules(sg({2, 3})))
    for (int shift = -10; shift <= 10; ++shift) expect += balance_defect(ShiftedModule{m, shift}) == 1;
  EXPECT_EQ(enumerate_sigma_i(2, 3, 1).size(), expect);
}

TEST(TildeSigma, TwoThree) {
  auto t = enumerate_tilde_sigma(2, 3);
  ASSERT_EQ(t.tuples.size(), 3u);
  for (const auto& d : t.tuples) {
    EXPECT_TRUE(is_flag_tuple(d, 2, 3));
    EXPECT_EQ(sum(d.d), 3);
    for (int i = 1; i <= 2; ++i) EXPECT_TRUE(basis_closed_under(chain_basis(d, 2, i), 2, 3));
  }
  EXPECT_EQ(enumerate_tilde_sigma(3, 4).tuples.size(), 16u);
}
