#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "convexoid/conjugate.hpp"
#include "convexoid/duality.hpp"
#include "convexoid/structural_gallery.hpp"

namespace cx = convexoid;
using cx::Mask;
using cx::SetSystem;
using cx::Side;

namespace {

// Distinct double-conjugate images over every system on n elements.
std::set<std::string> convex_family(const cx::SetInstance& inst, int n) {
  std::set<std::string> out;
  const std::uint64_t systems = std::uint64_t{1} << (std::size_t{1} << n);
  for (std::uint64_t k = 0; k < systems; ++k) {
    out.insert(cx::format_system(cx::system_of(cx::double_conjugate(inst, cx::membership(SetSystem::from_index(n, k))), n)));
  }
  return out;
}

}  // namespace

TEST(SubsetFormat, RoundTrip) {
  EXPECT_EQ(cx::format_subset(0b101), "{1,3}");
  EXPECT_EQ(cx::format_subset(0), "{}");
  EXPECT_EQ(cx::parse_subset("{ 1, 3 }", 3), 0b101U);
  EXPECT_EQ(cx::parse_subset("{}", 3), 0U);
  EXPECT_THROW(cx::parse_subset("{4}", 3), cx::InputError);
  EXPECT_THROW(cx::parse_subset("1,2", 3), cx::InputError);
  EXPECT_THROW(cx::parse_subset("{a}", 3), cx::InputError);
}

TEST(SetSystemFormat, HexRoundTrip) {
  for (std::uint64_t k : {0ULL, 1ULL, 0x96ULL, 0xffULL}) {
    const auto pi = SetSystem::from_index(3, k);
    EXPECT_EQ(cx::from_hex(cx::to_hex(pi), 3), pi);
  }
  EXPECT_EQ(cx::format_system(SetSystem::of(2, {1, 3})), "[{1} {1,2}]");
  EXPECT_THROW(cx::from_hex("zz", 3), cx::InputError);
}

TEST(CutSystem, TwoElementGround) {
  EXPECT_EQ(cx::cut_system(2, 1), SetSystem::of(2, {1, 3}));
  EXPECT_EQ(cx::cut_of_system(SetSystem(2)), SetSystem::power_set(2));
  EXPECT_EQ(cx::cut_of_system(cx::cut_of_system(SetSystem::of(2, {1}))), SetSystem::of(2, {1, 3}));
}

TEST(UpperClosure, Examples) {
  EXPECT_EQ(cx::upper_closure_oracle(SetSystem::of(2, {1})), SetSystem::of(2, {1, 3}));
  EXPECT_EQ(cx::upper_closure_oracle(SetSystem::power_set(2)), SetSystem::power_set(2));
  EXPECT_EQ(cx::upper_closure_oracle(SetSystem::of(2, {0})), SetSystem::power_set(2));
  EXPECT_TRUE(cx::is_upper(SetSystem::of(2, {1, 3})));
  EXPECT_FALSE(cx::is_upper(SetSystem::of(2, {1})));
}

TEST(CutSystem, DoubleCutSweepAtThree) {
  const auto inst = cx::concavoid_from_coupling(3, cx::SetCoupling::intersect());
  for (std::uint64_t k = 0; k < 256; ++k) {
    const auto pi = SetSystem::from_index(3, k);
    const auto cc = cx::cut_of_system(cx::cut_of_system(pi));
    ASSERT_EQ(cc, cx::upper_closure_oracle(pi)) << cx::format_system(pi);
    EXPECT_TRUE(pi.subset_of(cc));
    EXPECT_EQ(cc == pi, cx::is_upper(pi));
    // The generic engine and the specialized cut agree.
    EXPECT_EQ(cx::system_of(cx::conjugate(inst, cx::membership(pi)), 3), cx::cut_of_system(pi));
    EXPECT_EQ(cx::system_of(cx::double_conjugate(inst, cx::membership(pi)), 3), cc);
  }
}

TEST(CutSystem, SampledSweepAtFour) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto pi = SetSystem::from_index(4, rng() & 0xffff);
    const auto cc = cx::cut_of_system(cx::cut_of_system(pi));
    EXPECT_EQ(cc, cx::upper_closure_oracle(pi));
    EXPECT_EQ(cc == pi, cx::is_upper(pi));
  }
}

TEST(Affine, IntersectCouplingGivesExactlyTheCutSystems) {
  const auto inst = cx::concavoid_from_coupling(3, cx::SetCoupling::intersect());
  std::vector<cx::FuncTable<cx::Truth>> gs;
  for (std::uint64_t k = 0; k < 256; ++k) gs.push_back(cx::membership(SetSystem::from_index(3, k), Side::lambda));
  std::set<std::string> got, expected;
  for (const auto& h : cx::enumerate_affine(inst, gs)) got.insert(cx::format_system(cx::system_of(h, 3)));
  for (Mask t = 0; t < 8; ++t) expected.insert(cx::format_system(cx::cut_system(3, t)));
  expected.insert(cx::format_system(SetSystem::power_set(3)));
  EXPECT_EQ(got, expected);
}

TEST(Coupling, KCutFullIntersection) {
  const auto inst = cx::concavoid_from_coupling(3, cx::SetCoupling::kcut(3));
  for (std::size_t s = 0; s < 8; ++s) {
    for (std::size_t t = 0; t < 8; ++t) EXPECT_EQ(inst.phi(s, t).value, s == 7 && t == 7);
  }
  EXPECT_THROW(cx::concavoid_from_coupling(3, cx::SetCoupling::kcut(0)), cx::Error);
  EXPECT_THROW(cx::concavoid_from_coupling(3, cx::SetCoupling::kcut(4)), cx::Error);
}

TEST(Coupling, KCutFamiliesShrink) {
  const auto one = convex_family(cx::concavoid_from_coupling(3, cx::SetCoupling::kcut(1)), 3);
  for (int k = 2; k <= 3; ++k) {
    const auto fam = convex_family(cx::concavoid_from_coupling(3, cx::SetCoupling::kcut(k)), 3);
    for (const auto& s : fam) EXPECT_TRUE(one.count(s)) << "k=" << k << " " << s;
    EXPECT_LT(fam.size(), one.size());
  }
}

TEST(Coupling, ZeroThresholdWeightSumIsDegenerate) {
  const auto inst = cx::concavoid_from_coupling(3, cx::SetCoupling::weight_sum({1, 1, 1}, 0));
  for (const auto& v : inst.phi_table()) EXPECT_TRUE(v.value);
  for (std::uint64_t k = 0; k < 256; ++k) {
    EXPECT_EQ(cx::system_of(cx::conjugate(inst, cx::membership(SetSystem::from_index(3, k))), 3), SetSystem::power_set(3));
  }
}

TEST(Coupling, WeightIntersectThreshold) {
  const auto inst = cx::concavoid_from_coupling(2, cx::SetCoupling::weight_intersect({1, 2}, 2));
  EXPECT_FALSE(inst.phi(1, 3).value);  // w({1}) = 1
  EXPECT_TRUE(inst.phi(2, 3).value);   // w({2}) = 2
  EXPECT_THROW(cx::concavoid_from_coupling(2, cx::SetCoupling::weight_sum({1}, 1)), cx::Error);
}

TEST(Coupling, CustomTable) {
  const auto inst = cx::concavoid_from_coupling(2, cx::SetCoupling::table([](Mask s, Mask t) { return s == t; }));
  EXPECT_TRUE(inst.phi(2, 2).value);
  EXPECT_FALSE(inst.phi(2, 1).value);
}

TEST(Coupling, ShippedCouplingsFixIntersectionsOfAffineSystems) {
  const std::vector<cx::SetCoupling> couplings{cx::SetCoupling::intersect(), cx::SetCoupling::kcut(2),
                                               cx::SetCoupling::weight_sum({1, 2, 3}, 3),
                                               cx::SetCoupling::weight_intersect({1, 2, 3}, 2)};
  for (const auto& c : couplings) {
    const auto inst = cx::concavoid_from_coupling(3, c);
    for (std::uint64_t k = 0; k < 256; ++k) {
      const auto f = cx::double_conjugate(inst, cx::membership(SetSystem::from_index(3, k)));
      EXPECT_EQ(cx::double_conjugate(inst, f), f) << cx::to_string(c.kind);
    }
  }
}

TEST(Subgradients, ExampleAtTwo) {
  const auto pi = SetSystem::of(2, {1, 3});
  const auto d = cx::described_subgradients(pi, 2);
  // S = {2} is outside Pi: only T missing S.
  EXPECT_EQ(d, (cx::Subset{0, 1}));
  EXPECT_EQ(cx::described_subgradients(SetSystem(2), 1), (cx::Subset{0, 2}));
}

TEST(Subgradients, CharacterizationSweepAtTwo) {
  const auto r = cx::subgradient_characterization_check(2);
  EXPECT_EQ(r.checked, 64U);
  EXPECT_TRUE(r.ok()) << r.witness;
}

TEST(Subgradients, CharacterizationSweepAtThree) {
  const auto r = cx::subgradient_characterization_check(3);
  EXPECT_EQ(r.checked, 2048U);
  EXPECT_TRUE(r.ok()) << r.witness;
}

TEST(PathVariant, TriangleHasTwoPaths) {
  // Edge 1 joins s=0 and t=1 directly; edges 2 and 3 go through vertex 2.
  const std::vector<cx::UndirectedEdge> tri{{0, 1}, {1, 2}, {0, 2}};
  const auto inst = cx::path_variant_instance(tri, 0, 1);
  ASSERT_EQ(inst.lambda_size(), 2U);
  std::set<std::string> paths(inst.names(Side::lambda).begin(), inst.names(Side::lambda).end());
  EXPECT_EQ(paths, (std::set<std::string>{"{1}", "{2,3}"}));
  // Concave systems: intersections of the path cuts.
  const auto c1 = cx::cut_system(3, 0b001), c23 = cx::cut_system(3, 0b110);
  SetSystem both(3);
  for (Mask m = 0; m < 8; ++m) {
    if (c1.contains(m) && c23.contains(m)) both.insert(m);
  }
  const std::set<std::string> expected{cx::format_system(SetSystem::power_set(3)), cx::format_system(c1),
                                       cx::format_system(c23), cx::format_system(both)};
  EXPECT_EQ(convex_family(inst, 3), expected);
}

TEST(PathVariant, SingleEdge) {
  const auto inst = cx::path_variant_instance({{0, 1}}, 0, 1);
  EXPECT_EQ(inst.names(Side::lambda), (std::vector<std::string>{"{1}"}));
  EXPECT_EQ(convex_family(inst, 1),
            (std::set<std::string>{cx::format_system(cx::cut_system(1, 1)), cx::format_system(SetSystem::power_set(1))}));
}

TEST(PathVariant, Errors) {
  EXPECT_THROW(cx::path_variant_instance({{0, 1}}, 0, 0), cx::Error);
  EXPECT_THROW(cx::path_variant_instance({{0, 1}}, 0, 2), cx::Error);
}

TEST(HeytingChain, EnvelopeDominatesRandomTables) {
  std::vector<std::string> names{"a", "b", "c"};
  std::mt19937_64 rng(6);
  std::vector<int> phi;
  for (int i = 0; i < 9; ++i) phi.push_back(static_cast<int>(rng() % 4));
  const auto inst = cx::heyting_chain_instance(3, names, names, phi);
  const auto closed = cx::heyting_chain_instance(3, names, names, phi, cx::OdotStrategy::closed_form);
  for (int i = 0; i < 100; ++i) {
    cx::FuncTable<cx::Level> f{Side::delta, {}};
    for (int j = 0; j < 3; ++j) f.values.push_back(cx::Level{static_cast<int>(rng() % 4)});
    const auto fss = cx::double_conjugate(inst, f);
    for (std::size_t a = 0; a < 3; ++a) EXPECT_GE(fss[a].value, f[a].value);
    EXPECT_EQ(fss, cx::double_conjugate(closed, f));
    EXPECT_TRUE(cx::triple_conjugate_check(inst, f));
  }
}

TEST(HeytingChain, TwoLevelChainIsBoolean) {
  const auto boolean = cx::concavoid_from_coupling(2, cx::SetCoupling::intersect());
  std::vector<int> phi;
  for (const auto& v : boolean.phi_table()) phi.push_back(v.value ? 1 : 0);
  const auto chain = cx::heyting_chain_instance(1, boolean.names(Side::delta), boolean.names(Side::lambda), phi);
  for (std::uint64_t k = 0; k < 16; ++k) {
    const auto f = cx::membership(SetSystem::from_index(2, k));
    cx::FuncTable<cx::Level> g{Side::delta, {}};
    for (const auto& v : f.values) g.values.push_back(cx::Level{v.value ? 1 : 0});
    const auto fs = cx::conjugate(boolean, f);
    const auto gs = cx::conjugate(chain, g);
    for (std::size_t t = 0; t < fs.size(); ++t) EXPECT_EQ(fs[t].value ? 1 : 0, gs[t].value);
  }
}

TEST(HeytingChain, RejectsOutOfRangeLevels) {
  EXPECT_THROW(cx::heyting_chain_instance(2, {"a"}, {"b"}, {3}), cx::Error);
}

TEST(Alternatives, SubdomainShape) {
  const auto sys = cx::alternatives_instance({1}, {2});
  EXPECT_EQ(sys.delta_bar, (cx::Subset{0, 1}));
  EXPECT_EQ(sys.lambda_bar, (cx::Subset{0, 2}));
  EXPECT_EQ(sys.alpha, cx::kFalse);
}

TEST(Alternatives, NonemptyPrimalEmptiesDual) {
  const auto sys = cx::alternatives_instance({1}, {2});
  for (std::uint64_t k = 0; k < 16; ++k) {
    const auto pi = SetSystem::from_index(2, k);
    if (!pi.contains(0) && !pi.contains(1)) continue;
    EXPECT_EQ(cx::alternatives_check(sys, cx::membership(pi)).dual_system, cx::kFalse) << cx::format_system(pi);
  }
}

TEST(Alternatives, ExhaustiveSweepAtThree) {
  for (const auto& [u, v] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{{{1}, {2, 3}}, {{1, 2}, {3}}}) {
    const auto sys = cx::alternatives_instance(u, v);
    for (std::uint64_t k = 0; k < 256; ++k) {
      const auto r = cx::alternatives_check(sys, cx::membership(SetSystem::from_index(3, k)));
      EXPECT_TRUE(r.holds);
      EXPECT_FALSE(r.zP.value && r.dual_system.value) << k;
    }
  }
}
