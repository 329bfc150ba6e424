#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>

#include "jacring/bigraded.hpp"
#include "jacring/cache.hpp"
#include "jacring/filtration.hpp"
#include "jacring/graded_quotient.hpp"
#include "jacring/oracles.hpp"
#include "jacring/presentation.hpp"
#include "oracles_naive.hpp"

using namespace jacring;

namespace {

GradedQuotientOptions no_cache() {
  GradedQuotientOptions o;
  o.cache = nullptr;
  return o;
}

std::vector<std::size_t> closed(int p, int q, int n) {
  std::vector<std::size_t> out;
  for (const auto& c : naive::hilbert_closed(p, q, n)) out.push_back(c.get_ui());
  return out;
}

}  // namespace

TEST(MonomialBasis, CountsMatchPartitionOracle) {
  std::vector<int> w{1, 2, 3, 5};
  for (int d = 0; d <= 15; ++d) EXPECT_EQ(monomials_of_degree(w, d).size(), naive::monomial_count(w, d));
}

TEST(MonomialBasis, ReverseLexOrder) {
  auto b = monomials_of_degree({1, 1}, 2);
  ASSERT_EQ(b.size(), 3u);
  for (std::size_t i = 0; i + 1 < b.size(); ++i) EXPECT_TRUE(revlex_greater(b.monomials[i], b.monomials[i + 1]));
  EXPECT_EQ(b.find(b.monomials[1]), 1);
}

TEST(GradedQuotient, MonomialIdeal) {
  auto c = make_context({"x", "y"}, {1, 1});
  auto x = SparsePoly::variable(c, "x"), y = SparsePoly::variable(c, "y");
  GradedQuotient q(IdealPresentation{c, {x * x, pow(y, 3)}, Homogeneity::graded}, no_cache());
  EXPECT_EQ(q.hilbert_function(5), (std::vector<std::size_t>{1, 2, 2, 1, 0, 0}));
}

TEST(GradedQuotient, OTwoThree) {
  GradedQuotient q(build_IO(2, 3), no_cache());
  EXPECT_EQ(q.hilbert_function(4), (std::vector<std::size_t>{1, 0, 1, 0, 0}));
  EXPECT_EQ(q.dim(4), 0u);
}

TEST(GradedQuotient, OThreeFour) {
  GradedQuotient q(build_IO(3, 4), no_cache());
  EXPECT_EQ(q.hilbert_function(6), (std::vector<std::size_t>{1, 0, 1, 1, 1, 0, 1}));
  auto cert = q.artinian(20);
  EXPECT_TRUE(cert.certified);
  EXPECT_EQ(cert.top_degree, 6);
  EXPECT_EQ(std::accumulate(cert.hilbert.begin(), cert.hilbert.end(), std::size_t{0}), 5u);
  for (int d = 7; d <= 20; ++d) EXPECT_EQ(q.dim(d), 0u);
}

TEST(GradedQuotient, ClosedFormAndGorensteinSymmetry) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 5}, {4, 5}, {3, 7}, {2, 9}}) {
    GradedQuotient g(build_IO(p, q), no_cache());
    const int top = (p - 1) * (q - 1);
    auto h = g.hilbert_function(top + 3);
    EXPECT_EQ(h, closed(p, q, top + 3)) << p << "," << q;
    for (int j = 0; j <= top; ++j) EXPECT_EQ(h[j], h[top - j]) << p << "," << q << " j=" << j;
  }
}

TEST(GradedQuotient, EliminationDoesNotChangeHilbert) {
  GradedQuotientOptions raw = no_cache();
  raw.eliminate_linear = false;
  GradedQuotient a(build_IO(3, 5), raw), b(build_IO(3, 5), no_cache());
  EXPECT_EQ(a.hilbert_function(10), b.hilbert_function(10));
  EXPECT_GT(b.eliminated_count(), 0u);
}

TEST(GradedQuotient, CacheRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "jacring_gq_cache_test";
  std::filesystem::remove_all(dir);
  GradedQuotientOptions o;
  o.cache = std::make_shared<DiskCache>(dir);
  std::vector<std::size_t> first, second;
  {
    GradedQuotient q(build_IO(3, 4), o);
    first = q.hilbert_function(8);
  }
  EXPECT_TRUE(std::filesystem::exists(dir / "dims"));
  {
    GradedQuotient q(build_IO(3, 4), o);
    second = q.hilbert_function(8);
  }
  EXPECT_EQ(first, second);
  std::filesystem::remove_all(dir);
}

TEST(GrM, OThreeFour) {
  GradedQuotient q(build_IO(3, 4), no_cache());
  auto r = gr_m_filtration(q, 6);
  EXPECT_EQ(r.gr, (std::vector<std::size_t>{1, 2, 1, 1}));
  EXPECT_EQ(r.total, 5u);
}

TEST(GrM, OTwoThree) {
  GradedQuotient q(build_IO(2, 3), no_cache());
  EXPECT_EQ(gr_m_filtration(q, 2).gr, (std::vector<std::size_t>{1, 1}));
}

// eps x = 0 in Q[eps, x] with x of bidegree (0,1): x is eps-torsion, so the
// saturation is Q[eps, x]/(x).
TEST(Bigraded, ToySaturation) {
  auto c = make_context({"eps", "x"}, {1, 0}, std::vector<int>{0, 1});
  auto eps = SparsePoly::variable(c, "eps"), x = SparsePoly::variable(c, "x");
  BigradedQuotient q(IdealPresentation{c, {eps * x}, Homogeneity::bigraded});
  EXPECT_EQ(q.raw_dim(0, 0), 1u);
  EXPECT_EQ(q.raw_dim(0, 2), 1u);
  EXPECT_EQ(q.raw_dim(1, 1), 0u);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      auto s = q.saturated_dim(a, b);
      EXPECT_EQ(s.saturated, b == 0 ? 1u : 0u) << a << "," << b;
      EXPECT_TRUE(s.certified);
      EXPECT_TRUE(q.saturation_idempotent_at(a, b));
    }
}

TEST(Bigraded, ColumnsStabilizeToEpsOne) {
  BigradedQuotient q(build_F_family_reduced(2, 3));
  auto t = saturate_and_dims(q, 6, 6);
  EXPECT_TRUE(t.certified);
  EXPECT_EQ(t.dims[0][0], 1u);
  GradedQuotient e1(build_R_eps1(2, 3, 6), no_cache());
  for (int b = 0; b <= 6; ++b) EXPECT_EQ(t.dims[6][b], e1.dim(b)) << b;
}

TEST(Bigraded, IdempotentOnFamily) {
  BigradedQuotient q(build_F_family_reduced(3, 4));
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) EXPECT_TRUE(q.saturation_idempotent_at(a, b)) << a << "," << b;
}

TEST(Filtration, TwoThreeTable) {
  auto t = filtration_table(2, 3);
  EXPECT_EQ(t.dim_v, 2u);
  EXPECT_TRUE(t.stable);
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 2; ++j) EXPECT_EQ(t.at(i, j), (i == 0 && j == 0) || (i == 1 && j == 2) ? 1u : 0u);
}

TEST(Filtration, ThreeFourMarginals) {
  auto t = filtration_table(3, 4);
  EXPECT_EQ(t.row_sums(), (std::vector<std::size_t>{1, 1, 2, 1}));
  EXPECT_EQ(t.column_sums(), (std::vector<std::size_t>{1, 0, 1, 1, 1, 0, 1}));
  auto inv = t.check_invariants();
  EXPECT_TRUE(inv.support && inv.lefschetz && inv.exhausted);
}

TEST(Betti, SmallPairs) {
  EXPECT_EQ(betti_J(2, 3).values, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(betti_J(3, 4).values, (std::vector<std::size_t>{1, 1, 2, 1}));
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 5}, {2, 7}, {4, 5}}) {
    auto b = betti_J(p, q);
    EXPECT_TRUE(b.certified);
    EXPECT_TRUE(b.nonnegative_differences);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(b.total)), naive::choose(p + q, p) / (p + q));
  }
}

TEST(Betti, SaturationRouteAgrees) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {2, 5}}) {
    auto a = betti_J(p, q);
    auto b = betti_J_saturation(p, q, (p - 1) * (q - 1) + 4);
    EXPECT_TRUE(b.certified);
    EXPECT_EQ(a.values, b.values) << p << "," << q;
  }
}

TEST(Flatness, SmallWindows) {
  auto r = flatness_probe(2, 3, 4, 6);
  EXPECT_TRUE(r.consistent());
  EXPECT_TRUE(r.certified);
  auto z = flatness_probe(3, 4, 0, 0);
  ASSERT_EQ(z.slots.size(), 1u);
  EXPECT_EQ(z.slots[0].ring_dim, z.slots[0].image_dim);
}
