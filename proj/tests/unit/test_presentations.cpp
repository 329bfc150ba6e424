#include <gtest/gtest.h>

#include "jacring/graded_quotient.hpp"
#include "jacring/oracles.hpp"
#include "jacring/presentation.hpp"
#include "jacring/semigroup.hpp"
#include "jacring/serialize.hpp"

using namespace jacring;

namespace {
Rational rq(long n, long d = 1) { return make_rational(n, d); }

GradedQuotientOptions no_cache() {
  GradedQuotientOptions o;
  o.cache = nullptr;
  return o;
}

std::vector<std::size_t> hf(const IdealPresentation& pres, int up_to) {
  GradedQuotient q(pres, no_cache());
  return q.hilbert_function(up_to);
}
}  // namespace

TEST(BuildIO, TwoThreeGenerators) {
  auto pres = build_IO(2, 3);
  auto& c = pres.context;
  auto v = [&](const char* n) { return SparsePoly::variable(c, n); };
  ASSERT_EQ(pres.generators.size(), 3u);
  EXPECT_EQ(pres.generators[0], rq(6) * v("e2") - rq(4) * v("f2"));
  EXPECT_EQ(pres.generators[1], rq(-6) * v("f3"));
  EXPECT_EQ(pres.generators[2], rq(2) * v("e2") * v("f2"));
  EXPECT_EQ(pres.homogeneity, Homogeneity::graded);
  EXPECT_NO_THROW(audit_homogeneity(pres));
  // Substituting f2 = 3/2 e2, f3 = 0 leaves e2^2 = 0: dimension 2.
  EXPECT_EQ(hf(pres, 6), (std::vector<std::size_t>{1, 0, 1, 0, 0, 0, 0}));
}

TEST(BuildIO, GeneratorCount) {
  EXPECT_EQ(build_IO(3, 4).generators.size(), 5u);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 5}, {4, 5}}) {
    auto pres = build_IO(p, q);
    EXPECT_EQ(pres.generators.size(), static_cast<std::size_t>(p + q - 2));
    for (std::size_t k = 0; k < pres.generators.size(); ++k)
      EXPECT_EQ(homogeneous_degree(pres.generators[k]), static_cast<int>(k) + 2);
  }
}

TEST(BuildG, TwoThree) {
  auto pres = build_g_ideal(2, 3);
  ASSERT_EQ(pres.generators.size(), 1u);
  auto e2 = SparsePoly::variable(pres.context, "e2");
  EXPECT_EQ(pres.generators[0], rq(3, 8) * pow(e2, 2));
}

TEST(BuildG, HilbertAgreesWithIO) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 5}, {4, 5}, {2, 7}})
    EXPECT_EQ(hf(build_g_ideal(p, q), 2 * p * q), hf(build_IO(p, q), 2 * p * q)) << p << "," << q;
}

TEST(BuildFFamily, TopCoefficientVanishes) {
  auto pres = build_F_family(2, 3);
  EXPECT_EQ(pres.homogeneity, Homogeneity::bigraded);
  EXPECT_NO_THROW(audit_homogeneity(pres));
  ASSERT_EQ(pres.generators.size(), 7u);  // F_0..F_6
  EXPECT_TRUE(pres.generators.back().is_zero());
}

TEST(BuildFFamily, EpsOneSZeroGivesO) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}}) {
    auto specialized = specialize(build_F_family(p, q), {{"eps", rq(1)}, {"s", rq(0)}}, true);
    EXPECT_EQ(hf(specialized, 2 * p * q), hf(build_IO(p, q), 2 * p * q)) << p << "," << q;
  }
}

TEST(BuildHSp, IsSOneSpecialization) {
  auto fam = build_F_family(2, 3);
  auto hsp = deduplicate(build_theorem_HSp_ideal(2, 3));
  auto byhand = deduplicate(specialize(fam, {{"s", rq(1)}}, false));
  ASSERT_EQ(hsp.generators.size(), byhand.generators.size());
  for (std::size_t i = 0; i < hsp.generators.size(); ++i) EXPECT_EQ(to_string(hsp.generators[i]), to_string(byhand.generators[i]));
}

TEST(BuildREps1, StableDimensionIsModuleCount) {
  GradedQuotient q(build_R_eps1(2, 3, 6), no_cache());
  for (int b = 4; b <= 6; ++b) EXPECT_EQ(q.dim(b), 2u);
}

TEST(Toric, EquivalentToIOForPairs) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}}) {
    auto pres = build_toric_equations(NumericalSemigroup({p, q}));
    EXPECT_EQ(hf(pres, 2 * p * q), hf(build_IO(p, q), 2 * p * q)) << p << "," << q;
  }
}

TEST(Presentation, DeduplicateDropsZeroAndMultiples) {
  auto c = make_context({"x"}, {1});
  auto x = SparsePoly::variable(c, "x");
  IdealPresentation pres{c, {SparsePoly(c), x * x, rq(3) * x * x, x * x - x * x}, Homogeneity::graded};
  EXPECT_EQ(deduplicate(pres).generators.size(), 1u);
}

TEST(Elimination, RemovesLinearVariables) {
  auto r = eliminate_linear_variables(build_IO(2, 3));
  EXPECT_EQ(r.eliminated.size(), 2u);
  EXPECT_EQ(hf(r.presentation, 6), hf(build_IO(2, 3), 6));
}

TEST(Serialize, RoundTripAndStableHash) {
  auto pres = build_IO(3, 4);
  auto j = to_json(pres);
  auto back = presentation_from_json(j);
  EXPECT_EQ(presentation_hash(back), presentation_hash(pres));
  EXPECT_EQ(dump(to_json(back)), dump(j));
  EXPECT_NE(presentation_hash(build_IO(3, 5)), presentation_hash(pres));
  EXPECT_EQ(j["schema"], kSchemaVersion);
}

TEST(Parabolic, VanishesOnFlagTuples) {
  auto par = build_parabolic_ideal(2, 3);
  EXPECT_EQ(par.context->size(), 2u);
  for (const auto& d : enumerate_tilde_sigma(2, 3).tuples)
    for (const auto& g : par.generators) EXPECT_EQ(evaluate(g, {rq(d.d[0]), rq(d.d[1])}), 0);
  // (0, 3) is a balanced p-basis but not a flag tuple.
  bool all_zero = true;
  for (const auto& g : par.generators) all_zero = all_zero && evaluate(g, {rq(0), rq(3)}) == 0;
  EXPECT_FALSE(all_zero);
}
