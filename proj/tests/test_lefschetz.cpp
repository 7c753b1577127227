#include "properties.hpp"
#include "support.hpp"
#include "toric/lefschetz.hpp"

#include <gtest/gtest.h>

using namespace toric;
using namespace toric::testing;

namespace {

std::vector<Rational> coeffs(std::initializer_list<long> xs)
{
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Index rank_of(const RationalMatrix& m) { return m.size() == 0 ? 0 : rank<Rational>(m); }

}  // namespace

TEST(SupportData, ProjectiveLine)
{
  const DivisorData D = support_data(p1_fan(), coeffs({1, 0}));
  ASSERT_EQ(D.u.size(), 2u);
  EXPECT_EQ(D.u[0], RationalVector::Constant(1, 1));
  EXPECT_EQ(D.u[1], RationalVector::Zero(1));
  EXPECT_EQ(D.C, 1);
}

TEST(SupportData, Anticanonical)
{
  const Fan f = p2_fan();
  const DivisorData D = support_data(f, coeffs({1, 1, 1}));
  EXPECT_EQ(D.C, 1);
  EXPECT_TRUE(is_strictly_convex(f, D.u));
  EXPECT_FALSE(is_strictly_convex(f, support_data(f, coeffs({-1, -1, -1})).u));
}

TEST(SupportData, WeightedPlane)
{
  // rays e1, -e1-2e2 (weight 1) and e2 (weight 2); only the cone avoiding e2 is singular
  const Fan f = p112_fan();
  EXPECT_EQ(support_data(f, coeffs({0, 0, 1})).C, 1);
  EXPECT_EQ(support_data(f, coeffs({1, 0, 0})).C, 2);
  EXPECT_EQ(support_data(f, coeffs({0, 1, 0})).C, 2);
}

TEST(SupportData, NotQCartier)
{
  const Fan f = fan_of_cone(square_cone());
  try {
    support_data(f, coeffs({1, 0, 0, 0}));
    FAIL() << "expected NOT_Q_CARTIER";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotQCartier);
  }
}

TEST(LiftedComplex, ProjectiveLine)
{
  const Fan f = p1_fan();
  const auto s = lifted_complex(f, support_data(f, coeffs({1, 0})), 0);
  EXPECT_EQ(s.middle.dims, (std::vector<Index>{2, 2}));
  EXPECT_EQ(s.left.dims, (std::vector<Index>{1, 2}));
  EXPECT_EQ(s.right.dims, (std::vector<Index>{1}));
  EXPECT_EQ(rank_of(connecting_map(s, 0)), 1);
}

TEST(LiftedComplex, TrivialDivisorSplits)
{
  for (const Fan& f : {p1_fan(), p2_fan(), p1xp1_fan()}) {
    const DivisorData D = support_data(f, std::vector<Rational>(f.rays().size(), Rational(0)));
    for (int p = 0; p < f.lattice_rank(); ++p)
      for (int l = 0; l <= p; ++l) EXPECT_TRUE(connecting_map(f, D, p, l).isZero());
  }
}

TEST(LiftedComplex, BuildsOnSurfaces)
{
  std::mt19937_64 rng(2);
  std::vector<std::pair<Fan, std::vector<Rational>>> cases{
      {p2_fan(), coeffs({1, 1, 1})}, {p1xp1_fan(), coeffs({1, 0, 2, -1})}, {p112_fan(), coeffs({1, 0, 0})}};
  for (int t = 0; t < 2; ++t) {
    auto r = random_complete_simplicial_fan(rng, 3);
    cases.emplace_back(r.fan, r.alpha);
  }
  for (const auto& [f, alpha] : cases)
    for (int p = 0; p <= f.lattice_rank(); ++p) EXPECT_NO_THROW(lifted_complex(f, support_data(f, alpha), p));
}

TEST(LiftedComplex, ScalingIdentity)
{
  std::mt19937_64 rng(4);
  std::vector<std::pair<Fan, std::vector<Rational>>> cases{
      {p112_fan(), coeffs({1, 0, 0})}, {p2_fan(), coeffs({1, 0, 0})}, {p1xp1_fan(), coeffs({1, 1, 0, 0})}};
  {
    auto r = random_complete_simplicial_fan(rng, 3);
    cases.emplace_back(r.fan, r.alpha);
  }
  {
    const StarQuotient q = star_quotient(cone_13(), default_interior_ray(cone_13()));
    cases.emplace_back(q.fan, q.alpha);
  }
  for (const auto& [f, alpha] : cases) {
    const DivisorData D = support_data(f, alpha);
    for (const Integer& k : {D.C, Integer(3)}) {
      std::vector<Rational> scaled;
      for (const auto& a : alpha) scaled.push_back(a * Rational(k));
      const DivisorData kD = support_data(f, scaled);
      for (int p = 0; p < f.lattice_rank(); ++p)
        for (int l = 0; l <= p; ++l) EXPECT_EQ(connecting_map(f, kD, p, l), connecting_map(f, D, p, l) * Rational(k));
    }
  }
}

TEST(LiftIndices, Identities)
{
  std::mt19937_64 rng(8);
  std::vector<std::pair<Fan, std::vector<Rational>>> cases{{p112_fan(), coeffs({1, 0, 0})},
                                                           {p2_fan(), coeffs({2, -1, 3})}};
  for (const Cone& c : {cone_A(), cone_13()}) {
    const StarQuotient q = star_quotient(c, default_interior_ray(c));
    cases.emplace_back(q.fan, q.alpha);
  }
  cases.emplace_back(p1xp1_fan(), std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(0), Rational(1)});
  bool swapped_fails = false;
  for (const auto& [f, alpha] : cases) {
    const DivisorData D = support_data(f, alpha);
    const LiftedFaces L = lifted_faces(f, alpha);
    const Index n1 = f.lattice_rank() + 1;
    IntegerVector e = IntegerVector::Zero(n1);
    e(n1 - 1) = 1;
    auto face = [&](Index i) -> const Face& { return L.total.faces[static_cast<std::size_t>(i)]; };
    for (std::size_t t = 0; t < f.lattice.faces.size(); ++t) {
      EXPECT_GE(D.a[t], 1);
      const IntegerVector n = normal_generator(L.total, L.hat[t], L.tilde[t]);
      EXPECT_TRUE(in_span(IntegerVector(n * D.a[t] - e), face(L.hat[t])));
    }
    for (const auto& cov : f.lattice.coverings) {
      const auto mu = static_cast<std::size_t>(cov.mu), tau = static_cast<std::size_t>(cov.tau);
      IntegerVector lifted = IntegerVector::Zero(n1);
      lifted.head(n1 - 1) = cov.normal;
      const IntegerVector tilde = normal_generator(L.total, L.tilde[mu], L.tilde[tau]);
      const IntegerVector hat = normal_generator(L.total, L.hat[mu], L.hat[tau]);
      EXPECT_TRUE(in_span(IntegerVector(lifted - tilde), face(L.tilde[mu])));
      EXPECT_TRUE(in_span(IntegerVector(hat * D.a[mu] - tilde * D.a[tau]), face(L.tilde[mu])));
      if (!in_span(IntegerVector(tilde * D.a[mu] - hat * D.a[tau]), face(L.tilde[mu]))) swapped_fails = true;
    }
  }
  // the variant with the indices attached the other way round is not an identity
  EXPECT_TRUE(swapped_fails);
}

TEST(Hodge, ClassicalSurfaces)
{
  const HodgeTable p2 = hodge_table(p2_fan());
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) EXPECT_EQ(p2[p][q], p == q ? 1 : 0);
  EXPECT_EQ(hodge_table(p1xp1_fan())[1][1], 2);
  EXPECT_EQ(hodge_table(p112_fan())[1][1], 1);
  try {
    hodge_table(fan_of_cone(orthant(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotComplete);
  }
}

TEST(Hodge, MatchesFaceCountOracle)
{
  std::mt19937_64 rng(31);
  std::vector<Fan> fans{p1_fan(), p2_fan(), p1xp1_fan(), p112_fan()};
  for (int t = 0; t < 6; ++t) fans.push_back(random_complete_simplicial_fan(rng, 2 + t % 2).fan);
  for (const Fan& f : fans) {
    const HodgeTable h = hodge_table(f);
    const auto betti = h_vector_betti(f);
    const Index n = f.lattice_rank();
    for (Index k = 0; k <= 2 * n; ++k) {
      Index total = 0;
      for (Index p = 0; p <= n; ++p)
        if (k - p >= 0 && k - p <= n) total += h[static_cast<std::size_t>(p)][static_cast<std::size_t>(k - p)];
      EXPECT_EQ(total, betti[static_cast<std::size_t>(k)]);
    }
  }
}

TEST(HardLefschetz, Injective)
{
  const Fan p2 = p2_fan();
  const auto r = hard_lefschetz_injectivity_check(p2, support_data(p2, coeffs({1, 0, 0})));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.ranks.at(0), 1);
  const Fan q = p1xp1_fan();
  const auto s = hard_lefschetz_injectivity_check(q, support_data(q, coeffs({1, 1, 0, 0})));
  EXPECT_TRUE(s.ok);
  for (const Cone& c : {cone_A(), cone_B()}) {
    const StarQuotient sq = star_quotient(c, default_interior_ray(c));
    EXPECT_TRUE(hard_lefschetz_injectivity_check(sq.fan, support_data(sq.fan, sq.alpha)).ok);
  }
  try {
    hard_lefschetz_injectivity_check(p2, support_data(p2, coeffs({0, 0, 0})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAmple);
  }
}

TEST(Equivalence, OrthantAndConeA)
{
  const Cone o = orthant(3);
  for (int p = 0; p < 2; ++p)
    for (int l = 0; l <= p + 1; ++l) EXPECT_TRUE(lefschetz_equivalence_check(o, make_vector({1, 1, 1}), p, l).agree());
  const auto r = lefschetz_equivalence_check(cone_A(), make_vector({0, 0, 0, 1}), 2, 2);
  EXPECT_FALSE(r.vanishes);
  EXPECT_FALSE(r.injective);
  EXPECT_TRUE(r.agree());
}

TEST(LongExactSequence, Orthant)
{
  for (const auto& r : les_theorem(orthant(3), make_vector({1, 1, 1}))) {
    EXPECT_TRUE(r.exact) << r.failure;
    for (std::size_t i = 1; i < r.cone.size(); ++i) EXPECT_EQ(r.cone[i], 0);
  }
}

TEST(LongExactSequence, ConesAAndB)
{
  const auto a = les_theorem(cone_A(), make_vector({0, 0, 0, 1}));
  ASSERT_EQ(a.size(), 4u);
  for (const auto& r : a) EXPECT_TRUE(r.exact) << r.failure;
  EXPECT_EQ(a[3].cone[2], 1);
  EXPECT_EQ(a[3].exceptional_lm1[2], 2);
  EXPECT_EQ(a[3].connecting_rank[2], 1);
  const auto b = les_theorem(cone_B(), default_interior_ray(cone_B()));
  for (const auto& r : b) EXPECT_TRUE(r.exact) << r.failure;
  EXPECT_EQ(b[3].cone[2], 0);
  EXPECT_EQ(b[3].exceptional_lm1[2], 1);
}

TEST(Lcdef4, Exceptional)
{
  EXPECT_TRUE(lcdef4_via_exceptional(cone_A(), make_vector({0, 0, 0, 1})).lcdef_one);
  EXPECT_FALSE(lcdef4_via_exceptional(cone_B(), default_interior_ray(cone_B())).lcdef_one);
  EXPECT_TRUE(lcdef4_via_exceptional(cone_13(), default_interior_ray(cone_13())).lcdef_one);
  EXPECT_THROW(lcdef4_via_exceptional(orthant(3), make_vector({1, 1, 1})), Error);
}
