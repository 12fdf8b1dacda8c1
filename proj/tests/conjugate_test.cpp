#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "convexoid/conjugate.hpp"
#include "convexoid/functional_gallery.hpp"
#include "convexoid/oracles.hpp"
#include "convexoid/structural_gallery.hpp"

namespace cx = convexoid;
using cx::ExtRational;
using cx::Side;

namespace {

cx::FuncTable<ExtRational> table(Side side, std::initializer_list<int> xs) {
  cx::FuncTable<ExtRational> f{side, {}};
  for (int x : xs) f.values.emplace_back(x);
  return f;
}

cx::Instance<cx::ClassicCodomain> line3() { return cx::gallery::classic_1d().inst; }

cx::FuncTable<cx::Truth> members(const cx::SetSystem& pi) { return cx::membership(pi); }

// U = {1, 2}: ranks 0={}, 1={1}, 2={2}, 3={1,2}.
constexpr cx::Mask kEmpty = 0, k1 = 1, k2 = 2, k12 = 3;

}  // namespace

TEST(Conjugate, SquaresOnLineConjugateToZero) {
  const auto inst = line3();
  const auto f = table(Side::delta, {1, 0, 1});
  EXPECT_EQ(cx::conjugate(inst, f), table(Side::lambda, {0, 0, 0}));
  EXPECT_EQ(cx::double_conjugate(inst, f), f);
  EXPECT_TRUE(cx::is_convex(inst, f));
}

TEST(Conjugate, TopConjugatesToBottom) {
  const auto inst = line3();
  const auto f = inst.constant(Side::delta, ExtRational::pos_inf());
  EXPECT_EQ(cx::conjugate(inst, f), inst.constant(Side::lambda, ExtRational::neg_inf()));
  EXPECT_TRUE(cx::triple_conjugate_check(inst, f));
}

TEST(Conjugate, BottomIsFixedPoint) {
  const auto inst = line3();
  const auto f = inst.constant(Side::delta, ExtRational::neg_inf());
  EXPECT_EQ(cx::double_conjugate(inst, f), f);
  EXPECT_TRUE(cx::is_convex(inst, f));
}

TEST(Conjugate, LambdaSideConjugateUsesTransposedCoupling) {
  const auto inst = cx::gallery::classic_product().inst;
  std::mt19937_64 rng(7);
  const auto g = cx::random_table(inst, Side::lambda, rng);
  const auto t = inst.transposed();
  auto as_delta = g;
  as_delta.side = Side::delta;
  auto expected = cx::conjugate(t, as_delta);
  expected.side = Side::delta;
  EXPECT_EQ(cx::conjugate(inst, g), expected);
}

TEST(Conjugate, CutSystemOfTwoElementGround) {
  const auto inst = cx::concavoid_from_coupling(2, cx::SetCoupling::intersect());
  const auto pi = cx::SetSystem::of(2, {k1, k12});
  const auto fs = cx::conjugate(inst, members(pi));
  EXPECT_EQ(cx::system_of(fs, 2), cx::SetSystem::of(2, {k1, k12}));
  EXPECT_EQ(cx::system_of(fs, 2), cx::cut_of_system(pi));
}

TEST(Conjugate, DoubleConjugateOfSingletonIsUpperClosure) {
  const auto inst = cx::concavoid_from_coupling(2, cx::SetCoupling::intersect());
  const auto pi = cx::SetSystem::of(2, {k1});
  const auto fss = cx::double_conjugate(inst, members(pi));
  EXPECT_EQ(cx::system_of(fss, 2), cx::upper_closure_oracle(pi));
  EXPECT_FALSE(cx::is_convex(inst, members(pi)));
}

// The concavoid runs as a convexoid over the dual carrier. Computing the
// infimum of implications directly over the Boolean carrier must give the
// same table.
TEST(Conjugate, ConcavoidDelegationMatchesDirectInfimum) {
  const auto inst = cx::concavoid_from_coupling(3, cx::SetCoupling::intersect());
  for (std::uint64_t k = 0; k < 256; ++k) {
    const auto f = members(cx::SetSystem::from_index(3, k));
    cx::FuncTable<cx::Truth> direct{Side::lambda, {}};
    for (std::size_t t = 0; t < inst.lambda_size(); ++t) {
      bool acc = true;
      for (std::size_t s = 0; s < inst.delta_size(); ++s) acc = acc && (!f[s].value || inst.phi(s, t).value);
      direct.values.push_back(cx::Truth{acc});
    }
    ASSERT_EQ(cx::conjugate(inst, f), direct) << k;
  }
}

TEST(Conjugate, TripleConjugateOnRandomBooleanSystems) {
  const auto inst = cx::concavoid_from_coupling(3, cx::SetCoupling::intersect());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto f = cx::random_table(inst, Side::delta, rng);
    EXPECT_TRUE(cx::triple_conjugate_check(inst, f));
    EXPECT_TRUE(cx::pointwise_leq(inst.codomain(), cx::double_conjugate(inst, f), f));
  }
}

TEST(Conjugate, EngineMatchesReEnumeratedSupremum) {
  const auto g = cx::gallery::mult_1d();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto f = cx::random_table(g.inst, Side::delta, rng);
    const auto fs = cx::conjugate(g.inst, f);
    const cx::MultiplicativeCodomain c;
    for (std::size_t b = 0; b < fs.size(); ++b) {
      std::vector<ExtRational> vals;
      for (std::size_t a = 0; a < f.size(); ++a) vals.push_back(c.odot(f[a], g.inst.phi(a, b)));
      EXPECT_EQ(fs[b], cx::sup_set(c, vals));
    }
  }
}

TEST(Subdifferential, SquaresAtOne) {
  const auto inst = line3();
  const auto f = table(Side::delta, {1, 0, 1});
  EXPECT_EQ(cx::subdifferential(inst, f, 2), (cx::Subset{2}));
}

TEST(Subdifferential, BottomFunctionHitsEverything) {
  const auto inst = line3();
  const auto f = inst.constant(Side::delta, ExtRational::neg_inf());
  for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(cx::subdifferential(inst, f, a), (cx::Subset{0, 1, 2}));
}

TEST(Subdifferential, SetSystemOutsidePi) {
  const auto inst = cx::concavoid_from_coupling(2, cx::SetCoupling::intersect());
  const auto f = members(cx::SetSystem::of(2, {k1, k12}));
  // Tight Fenchel-Young: every T missing S = {2}.
  EXPECT_EQ(cx::classic_subdifferential(inst, f, k2), (cx::Subset{kEmpty, k1}));
  // Relative-cover equality: 0 => x is 1, so T ranges over where f* is 1.
  EXPECT_EQ(cx::subdifferential(inst, f, k2), (cx::Subset{k1, k12}));
}

TEST(Subdifferential, OutOfRangeThrows) {
  const auto inst = line3();
  EXPECT_THROW(cx::subdifferential(inst, table(Side::delta, {0, 0, 0}), 3), cx::Error);
}

TEST(Affine, CutSystemFromConstantOne) {
  const auto inst = cx::concavoid_from_coupling(2, cx::SetCoupling::intersect());
  const auto g = inst.constant(Side::lambda, cx::kTrue);
  EXPECT_EQ(cx::system_of(cx::affine_function(inst, g, k1), 2), cx::SetSystem::of(2, {k1, k12}));
}

TEST(Affine, ClassicLinearAndTop) {
  const auto inst = line3();
  EXPECT_EQ(cx::affine_function(inst, table(Side::lambda, {0, 0, 0}), 2), table(Side::delta, {-1, 0, 1}));
  const auto top = inst.constant(Side::lambda, ExtRational::pos_inf());
  EXPECT_EQ(cx::affine_function(inst, top, 0), inst.constant(Side::delta, ExtRational::neg_inf()));
}

TEST(Convexity, ConjugatesAreConvex) {
  const auto inst = cx::gallery::classic_product().inst;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto g = cx::random_table(inst, Side::lambda, rng);
    EXPECT_TRUE(cx::is_convex(inst, cx::conjugate(inst, g)));
  }
}

TEST(FenchelYoung, Examples) {
  const auto inst = line3();
  const auto f = table(Side::delta, {1, 0, 1});
  EXPECT_TRUE(cx::fenchel_young_check(inst, f, cx::conjugate(inst, f)));
  EXPECT_FALSE(cx::fenchel_young_check(inst, f, table(Side::lambda, {-10, -10, -10})));
  EXPECT_TRUE(cx::fenchel_young_check(inst, inst.constant(Side::delta, ExtRational::pos_inf()),
                                      table(Side::lambda, {-10, -10, -10})));
  EXPECT_THROW(cx::fenchel_young_check(inst, f, f), cx::Error);
}

TEST(FenchelYoung, HoldsForRandomPairsAndConjugates) {
  const auto g = cx::gallery::norm_l1();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto f = cx::random_table(g.inst, Side::delta, rng);
    EXPECT_TRUE(cx::fenchel_young_check(g.inst, f, cx::conjugate(g.inst, f)));
  }
}

TEST(Antitone, PointwiseLargerHasSmallerConjugate) {
  const auto inst = cx::gallery::classic_product().inst;
  const cx::ClassicCodomain c;
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto f1 = cx::random_table(inst, Side::delta, rng);
    auto f2 = f1;
    for (auto& v : f2.values) v = c.join(v, cx::random_table(inst, Side::delta, rng)[0]);
    ASSERT_TRUE(cx::pointwise_leq(c, f1, f2));
    EXPECT_TRUE(cx::pointwise_leq(c, cx::conjugate(inst, f2), cx::conjugate(inst, f1)));
  }
}

TEST(EnumerateAffine, BooleanCutSystems) {
  const auto inst = cx::concavoid_from_coupling(2, cx::SetCoupling::intersect());
  std::vector<cx::FuncTable<cx::Truth>> gs;
  for (std::uint64_t k = 0; k < 16; ++k) gs.push_back(cx::membership(cx::SetSystem::from_index(2, k), Side::lambda));
  const auto hs = cx::enumerate_affine(inst, gs);
  std::set<std::string> got, expected;
  for (const auto& h : hs) got.insert(cx::format_system(cx::system_of(h, 2)));
  for (cx::Mask t = 0; t < 4; ++t) expected.insert(cx::format_system(cx::cut_system(2, t)));
  expected.insert(cx::format_system(cx::SetSystem::power_set(2)));
  EXPECT_EQ(got, expected);
  EXPECT_EQ(hs.size(), 5U);
}

TEST(EnumerateAffine, ClassicLinearTables) {
  const auto inst = line3();
  const auto hs = cx::enumerate_affine(inst, {table(Side::lambda, {0, 0, 0})});
  ASSERT_EQ(hs.size(), 3U);
  EXPECT_EQ(hs[0], table(Side::delta, {1, 0, -1}));
  EXPECT_EQ(hs[1], table(Side::delta, {0, 0, 0}));
  EXPECT_EQ(hs[2], table(Side::delta, {-1, 0, 1}));
  EXPECT_TRUE(cx::enumerate_affine(inst, {}).empty());
}

TEST(EnvelopeOracle, MatchesDoubleConjugate) {
  const auto g = cx::gallery::classic_product();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const auto f = cx::random_table(g.inst, Side::delta, rng);
    EXPECT_EQ(cx::envelope_oracle(g.inst, f), cx::double_conjugate(g.inst, f));
  }
}
