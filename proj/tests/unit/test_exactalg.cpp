#include <gtest/gtest.h>

#include <random>

#include "jacring/graded_quotient.hpp"
#include "jacring/matrix.hpp"
#include "jacring/poly.hpp"
#include "jacring/rational.hpp"
#include "oracles_naive.hpp"

using namespace jacring;

namespace {

ContextPtr ew() { return make_context({"e2", "w"}, {2, 1}); }

SparsePoly one_plus_e2w2() {
  auto c = ew();
  return SparsePoly::constant(c, 1) + SparsePoly::variable(c, "e2") * pow(SparsePoly::variable(c, "w"), 2);
}

Rational rq(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST(Rational, CanonicalForm) {
  auto r = make_rational(6, -4);
  EXPECT_TRUE(is_canonical(r));
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(parse_rational("-3/2"), r);
  EXPECT_EQ(parse_rational("7"), rq(7));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, BinomialMatchesPascal) {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), naive::choose(n, k));
  EXPECT_EQ(binomial(rq(3, 2), 2), rq(3, 8));
}

TEST(Poly, MultiplyByOneIsIdentity) {
  auto e = one_plus_e2w2();
  EXPECT_EQ(e * SparsePoly::constant(ew(), 1), e);
}

TEST(Poly, SquareOfOnePlusE2W2) {
  auto c = ew();
  auto e2 = SparsePoly::variable(c, "e2"), w = SparsePoly::variable(c, "w");
  auto expect = SparsePoly::constant(c, 1) + rq(2) * e2 * pow(w, 2) + pow(e2, 2) * pow(w, 4);
  EXPECT_EQ(pow(one_plus_e2w2(), 2), expect);
}

TEST(Poly, CoefficientExtraction) {
  auto c = ew();
  EXPECT_EQ(coeff_of(one_plus_e2w2(), "w", 2), SparsePoly::variable(c, "e2"));
  EXPECT_TRUE(coeff_of(SparsePoly(c), "w", 5).is_zero());

  auto ctx = make_context({"e2", "f2", "f3", "w"}, {2, 2, 3, 1});
  auto v = [&](const char* n) { return SparsePoly::variable(ctx, n); };
  auto e = SparsePoly::constant(ctx, 1) + v("e2") * pow(v("w"), 2);
  auto f = SparsePoly::constant(ctx, 1) + v("f2") * pow(v("w"), 2) + v("f3") * pow(v("w"), 3);
  auto de = rq(2) * v("e2") * v("w");
  auto df = rq(2) * v("f2") * v("w") + rq(3) * v("f3") * pow(v("w"), 2);
  auto expr = rq(3) * de * f - rq(2) * e * df;
  auto w = v("w");
  auto expect = (rq(6) * v("e2") - rq(4) * v("f2")) * w - rq(6) * v("f3") * pow(w, 2) +
                rq(2) * v("e2") * v("f2") * pow(w, 3);
  EXPECT_EQ(expr, expect);
  EXPECT_EQ(coeff_of(expr, "w", 3), rq(2) * v("e2") * v("f2"));
}

TEST(Poly, RationalPowerSeries) {
  auto c = ew();
  auto e2 = SparsePoly::variable(c, "e2"), w = SparsePoly::variable(c, "w");
  auto s = rational_power_series(one_plus_e2w2(), rq(3, 2), "w", 4);
  auto expect = SparsePoly::constant(c, 1) + rq(3, 2) * e2 * pow(w, 2) + rq(3, 8) * pow(e2, 2) * pow(w, 4);
  EXPECT_EQ(s, expect);
  EXPECT_EQ(rational_power_series(one_plus_e2w2(), rq(1), "w", 4), one_plus_e2w2());
  EXPECT_EQ(rational_power_series(one_plus_e2w2(), rq(0), "w", 4), SparsePoly::constant(c, 1));
  // (1+x)^{1/2} squared is 1+x up to the truncation order.
  auto h = rational_power_series(one_plus_e2w2(), rq(1, 2), "w", 8);
  EXPECT_EQ(truncate(h * h, 1, 8), one_plus_e2w2());
}

TEST(Poly, ComposeAndEvaluate) {
  auto c = make_context({"x", "y"}, {1, 1});
  auto x = SparsePoly::variable(c, "x"), y = SparsePoly::variable(c, "y");
  auto p = pow(x + y, 3) - rq(2) * x;
  EXPECT_EQ(evaluate(p, {rq(1), rq(2)}), rq(25));
  auto q = substitute(p, 1, SparsePoly::constant(c, 0));
  EXPECT_EQ(q, pow(x, 3) - rq(2) * x);
  EXPECT_EQ(homogeneous_degree(pow(x + y, 3)), 3);
  EXPECT_FALSE(homogeneous_degree(p).has_value());
}

TEST(Matrix, KernelOfIdentityIsEmpty) {
  EXPECT_TRUE(kernel_basis(ExactMatrix::identity(3)).empty());
}

TEST(Matrix, KernelOfOneByTwo) {
  auto m = ExactMatrix::from_rows({{rq(1), rq(-1)}}, 2);
  auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], k[0][1]);
  EXPECT_NE(k[0][0], 0);
}

TEST(Matrix, SubspaceOpsTrivialCases) {
  auto u = ExactMatrix::from_rows({{rq(1), rq(2), rq(0)}, {rq(0), rq(1), rq(1)}}, 3);
  auto same = subspace_ops(u, u);
  EXPECT_EQ(same.dim_intersection, 2u);
  EXPECT_EQ(same.dim_sum, 2u);
  auto a = ExactMatrix::from_rows({{rq(1), rq(0)}}, 2), b = ExactMatrix::from_rows({{rq(1), rq(1)}}, 2);
  EXPECT_EQ(subspace_ops(a, b).dim_intersection, 0u);
}

TEST(Matrix, RandomAgainstNaiveElimination) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
    ExactMatrix m(r, c);
    naive::Mat ref(r, std::vector<naive::Q>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        // Sparse-ish entries so that rank deficiency actually occurs.
        Rational v = coef(rng) % 2 == 0 ? rq(coef(rng), 1 + std::abs(coef(rng))) : rq(0);
        m.at(i, j) = v;
        ref[i][j] = v;
      }
    EXPECT_EQ(m.rank(), naive::rank(ref));
    auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size(), c - m.rank());
    for (const auto& k : ker)
      for (const auto& x : m.apply(k)) EXPECT_EQ(x, 0);

    SparseEchelon e(static_cast<int>(c));
    for (std::size_t i = 0; i < r; ++i) e.insert(integer_row(m.row(i)));
    EXPECT_EQ(e.rank(), m.rank());
  }
}

TEST(Matrix, InclusionExclusionOnRandomSubspaces) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    ExactMatrix u(3, 5), v(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        u.at(i, j) = rq(coef(rng), 1 + std::abs(coef(rng)));
        v.at(i, j) = j < 2 ? u.at(i, j) : rq(coef(rng));  // force some overlap
      }
    auto d = subspace_ops(u, v);
    EXPECT_EQ(d.dim_u + d.dim_v, d.dim_sum + d.dim_intersection);
    naive::Mat stacked;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto ur = u.row(i), vr = v.row(i);
      stacked.emplace_back(ur.begin(), ur.end());
      stacked.emplace_back(vr.begin(), vr.end());
    }
    EXPECT_EQ(d.dim_sum, naive::rank(stacked));
  }
}

TEST(Matrix, RrefHasUnitPivots) {
  auto m = ExactMatrix::from_rows({{rq(2), rq(4), rq(6)}, {rq(1), rq(3), rq(5)}}, 3);
  auto r = m.rref();
  ASSERT_EQ(r.pivots.size(), 2u);
  EXPECT_EQ(r.matrix.at(0, r.pivots[0]), 1);
  EXPECT_EQ(r.matrix.at(1, r.pivots[1]), 1);
  EXPECT_EQ(r.matrix.at(0, r.pivots[1]), 0);
}
