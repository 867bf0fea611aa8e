#include <gtest/gtest.h>

#include <omp.h>

#include "oracles.hpp"
#include "twisted/error.hpp"
#include "twisted/fintop.hpp"

using namespace twisted;
using namespace twisted::fintop;

namespace {

FiniteTopology sierpinski() { return FiniteTopology(2, {0b00, 0b01, 0b11}); }
// {∅, {1}, {0,1}, {1,2}, {0,1,2}}
FiniteTopology chain3() { return FiniteTopology(3, {0b000, 0b010, 0b011, 0b110, 0b111}); }

std::vector<PointSet> sorted(std::vector<PointSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(FiniteTopology, SubbasisExamples) {
  EXPECT_EQ(FiniteTopology::from_subbasis(3, {}).opens(), (std::vector<PointSet>{0, 0b111}));
  std::vector<PointSet> points{0b001, 0b010, 0b100};
  EXPECT_EQ(FiniteTopology::from_subbasis(3, points).opens().size(), 8u);
  std::vector<PointSet> two{0b011, 0b110};
  EXPECT_EQ(FiniteTopology::from_subbasis(3, two).opens(),
            (std::vector<PointSet>{0, 0b010, 0b011, 0b110, 0b111}));
  EXPECT_EQ(FiniteTopology::from_subbasis(0, {}).opens(), (std::vector<PointSet>{0}));
}

TEST(FiniteTopology, SubbasisMatchesFixpointOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<PointSet> sub(rng() % 5);
    for (auto& s : sub) s = static_cast<PointSet>(rng()) & full_set(n);
    EXPECT_EQ(FiniteTopology::from_subbasis(n, sub).opens(), oracle::lattice_closure(n, sub));
  }
}

TEST(FiniteTopology, RejectsMalformedFamilies) {
  EXPECT_THROW(FiniteTopology(2, {0b11}), InputError);                // no ∅
  EXPECT_THROW(FiniteTopology(2, {0b00, 0b01}), InputError);          // no full set
  EXPECT_THROW(FiniteTopology(2, {0b00, 0b01, 0b10, 0b11 | 0b100}), InputError);
  EXPECT_THROW(FiniteTopology(3, {0, 0b001, 0b010, 0b111}), InputError);  // {0}∪{1} missing
  std::vector<PointSet> bad{0b1000};
  EXPECT_THROW(FiniteTopology::from_subbasis(3, bad), InputError);
  EXPECT_THROW(FiniteTopology::discrete(kMaxPoints + 1), InputError);
}

TEST(FiniteTopology, MinimalNeighborhoods) {
  EXPECT_EQ(FiniteTopology::discrete(3).minimal_neighborhood(1), 0b010u);
  EXPECT_EQ(FiniteTopology::indiscrete(3).minimal_neighborhood(1), 0b111u);
  EXPECT_EQ(chain3().minimal_neighborhood(0), 0b011u);
}

TEST(FiniteTopology, ClosureInteriorExamples) {
  EXPECT_EQ(FiniteTopology::discrete(3).closure(0b001), 0b001u);
  EXPECT_EQ(FiniteTopology::indiscrete(2).closure(0b01), 0b11u);
  EXPECT_EQ(chain3().interior(0b101), 0u);
}

TEST(FiniteTopology, ClosureInteriorHausdorffAgreeWithOraclesOnAllSmallSpaces) {
  for (int n = 0; n <= 3; ++n) {
    const auto topologies = oracle::all_topologies(n);
    EXPECT_EQ(all_topologies(n).size(), topologies.size());
    for (const auto& opens : topologies) {
      const FiniteTopology t(n, opens);
      EXPECT_EQ(t.is_hausdorff(), oracle::hausdorff(opens, n));
      EXPECT_EQ(t.is_hausdorff(), t.is_discrete());
      for (PointSet s = 0; s <= full_set(n); ++s) {
        EXPECT_EQ(t.closure(s), oracle::closure(opens, n, s));
        EXPECT_EQ(t.interior(s), oracle::interior(opens, s));
        EXPECT_TRUE(is_subset(t.interior(s), s));
        EXPECT_TRUE(is_subset(s, t.closure(s)));
      }
      EXPECT_EQ(t.closure(0), 0u);
      EXPECT_EQ(t.interior(t.full()), t.full());
    }
  }
}

TEST(FiniteTopology, HausdorffExamples) {
  EXPECT_TRUE(FiniteTopology::discrete(4).is_hausdorff());
  EXPECT_FALSE(FiniteTopology::indiscrete(2).is_hausdorff());
  EXPECT_FALSE(chain3().is_hausdorff());
}

TEST(ContinuousFiniteMap, RejectsDiscontinuousMaps) {
  // identity from the indiscrete to the discrete 2-point space
  EXPECT_THROW(ContinuousFiniteMap(FiniteTopology::indiscrete(2), FiniteTopology::discrete(2),
                                   {0, 1}),
               InputError);
  EXPECT_THROW(ContinuousFiniteMap(FiniteTopology::discrete(2), FiniteTopology::discrete(2), {0}),
               InputError);
  EXPECT_THROW(ContinuousFiniteMap(FiniteTopology::discrete(1), FiniteTopology::discrete(2), {2}),
               InputError);
}

TEST(TwistedSum, EmptyYGivesZ) {
  const auto z = chain3();
  const auto s = twisted_sum(FiniteTopology::discrete(0), z,
                             ContinuousFiniteMap(FiniteTopology::discrete(0), z, {}));
  EXPECT_EQ(s.topology().opens(), z.opens());
}

TEST(TwistedSum, TwoPoints) {
  const auto p = FiniteTopology::discrete(1);
  const auto s = twisted_sum(p, p, ContinuousFiniteMap::identity(p));
  EXPECT_EQ(s.topology().opens().size(), 4u);
}

TEST(TwistedSum, SierpinskiPlusPoint) {
  const auto y = sierpinski();
  const auto z = FiniteTopology::discrete(1);
  const auto f = ContinuousFiniteMap::constant(y, z, 0);
  const auto s = twisted_sum(y, z, f);
  const std::vector<PointSet> expected{0, 0b001, 0b011, 0b100, 0b101, 0b111};
  EXPECT_EQ(s.topology().opens(), expected);
  EXPECT_EQ(s.topology().opens(), oracle::twisted_opens(y.opens(), 2, z.opens(), 1, f.values()));
}

TEST(TwistedSum, MatchesGeneratorOracleOnAllSmallInstances) {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (const auto& y : all_topologies(n))
        for (const auto& z : all_topologies(m))
          for (const auto& f : all_continuous_maps(y, z)) {
            const auto tw = twisted_sum(y, z, f);
            EXPECT_EQ(tw.topology().opens(), oracle::twisted_opens(y.opens(), n, z.opens(), m,
                                                                   f.values()));
            EXPECT_EQ(direct_sum(y, z).topology().opens(),
                      oracle::direct_opens(y.opens(), n, z.opens()));
          }
}

TEST(TwistedSum, RejectsMismatchedMap) {
  const auto y = FiniteTopology::discrete(2);
  const auto f = ContinuousFiniteMap::identity(FiniteTopology::discrete(1));
  EXPECT_THROW(twisted_sum(y, FiniteTopology::discrete(1), f), InputError);
}

TEST(DirectSum, Counts) {
  const auto p = FiniteTopology::discrete(1);
  EXPECT_EQ(direct_sum(p, p).topology().opens().size(), 4u);
  EXPECT_EQ(direct_sum(FiniteTopology::indiscrete(2), p).topology().opens().size(), 4u);
}

TEST(TwistedSum, LemmasOnChain) {
  const auto y = chain3();
  const auto z = sierpinski();
  // 0 -> 1, 1 -> 0, 2 -> 0: preimage of {0} is {1,2}, open in y
  const ContinuousFiniteMap f(y, z, {1, 0, 0});
  const auto s = twisted_sum(y, z, f);
  EXPECT_EQ(s.topology().relative_opens(s.y_block()), y.opens());
  EXPECT_EQ(s.topology().relative_opens(s.z_block()), z.opens());
  EXPECT_TRUE(s.topology().is_open(s.y_block()));
  EXPECT_TRUE(s.topology().is_closed(s.z_block()));
  for (PointSet u : s.topology().opens())
    EXPECT_TRUE(direct_sum(y, z).topology().is_open(u));
}

TEST(BasisDecomposition, WholeSpaceIsOneType23Set) {
  const auto y = chain3();
  const auto z = sierpinski();
  const auto s = twisted_sum(y, z, ContinuousFiniteMap(y, z, {1, 0, 0}));
  const auto parts = basis_decomposition(s, s.topology().full());
  ASSERT_TRUE(parts.has_value());
  ASSERT_EQ(parts->size(), 1u);
  EXPECT_EQ((*parts)[0].kind, BasisElement::Kind::type23);
  EXPECT_EQ((*parts)[0].y_open, y.full());
  EXPECT_EQ((*parts)[0].w, z.full());
}

TEST(BasisDecomposition, Type1AndRandomOpens) {
  const auto y = FiniteTopology::from_subbasis(3, std::vector<PointSet>{0b001, 0b110});
  const auto z = FiniteTopology::discrete(2);
  const auto s = twisted_sum(y, z, ContinuousFiniteMap::constant(y, z, 1));
  const auto parts = basis_decomposition(s, 0b001);
  ASSERT_TRUE(parts.has_value());
  ASSERT_EQ(parts->size(), 1u);
  EXPECT_EQ((*parts)[0].kind, BasisElement::Kind::type1);

  const auto basis = standard_basis(s);
  for (PointSet u : s.topology().opens()) {
    const auto d = basis_decomposition(s, u);
    ASSERT_TRUE(d.has_value());
    PointSet un = 0;
    for (const auto& e : *d) {
      un |= e.set;
      EXPECT_TRUE(std::any_of(basis.begin(), basis.end(),
                              [&](const BasisElement& b) { return b.set == e.set; }));
    }
    EXPECT_EQ(un, u);
  }
  // every ∅ ⊔ W is open here, since finite Y is compact; {y1} ⊔ ∅ is not
  EXPECT_TRUE(basis_decomposition(s, s.embed(0, 0b10)).has_value());
  EXPECT_FALSE(basis_decomposition(s, s.embed(0b010, 0)).has_value());
}

TEST(Diagram, CoarseZ) {
  for (int n = 0; n <= 3; ++n) {
    const auto y = FiniteTopology::discrete(n);
    const auto z = FiniteTopology::indiscrete(2);
    const auto r = check_diagram(y, z, ContinuousFiniteMap::constant(y, z, 0));
    EXPECT_TRUE(r.sums_coincide);
    EXPECT_EQ(r.sums_coincide, r.y_compact);
    EXPECT_FALSE(r.z_hausdorff);
    // constant map into a non-Hausdorff Z: image not closed although (6) holds
    EXPECT_EQ(r.image_closed, n == 0);
    EXPECT_TRUE(r.consistent());
  }
}

TEST(Diagram, IdentityOnDiscrete) {
  const auto y = FiniteTopology::discrete(3);
  const auto r = check_diagram(y, y, ContinuousFiniteMap::identity(y));
  EXPECT_TRUE(r.sums_coincide && r.y_compact && r.y_locally_compact && r.image_closed &&
              r.z_block_open && r.z_nicely_covered && r.z_hausdorff);
  EXPECT_TRUE(r.consistent());
}

TEST(Diagram, IdentityImageAlwaysClosed) {
  for (const auto& y : all_topologies(3)) {
    const auto r = check_diagram(y, y, ContinuousFiniteMap::identity(y));
    EXPECT_TRUE(r.image_closed);
  }
}

TEST(Diagram, ProductProjection) {
  for (const auto& z : all_topologies(2)) {
    const auto f = ContinuousFiniteMap::first_projection(z);
    const auto r = check_diagram(f.source(), z, f);
    EXPECT_TRUE(r.image_closed);
    EXPECT_TRUE(r.z_nicely_covered);
    EXPECT_TRUE(r.consistent());
  }
}

TEST(Diagram, NicelyCoveredRoutesAgree) {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m)
      for (const auto& y : all_topologies(n))
        for (const auto& z : all_topologies(m))
          for (const auto& f : all_continuous_maps(y, z))
            EXPECT_EQ(nicely_covered(f), nicely_covered_exhaustive(f));
}

TEST(Borel, Examples) {
  const auto d2 = FiniteTopology::discrete(2);
  const auto s = twisted_sum(d2, d2, ContinuousFiniteMap::identity(d2));
  EXPECT_EQ(borel_algebra(s).size(), 16u);

  const auto y = FiniteTopology::indiscrete(2);
  const auto p = FiniteTopology::discrete(1);
  const auto t = twisted_sum(y, p, ContinuousFiniteMap::constant(y, p, 0));
  const std::vector<PointSet> blocks{0, 0b011, 0b100, 0b111};
  EXPECT_EQ(borel_algebra(t), blocks);
  EXPECT_EQ(borel_algebra(t), borel_algebra(direct_sum(y, p)));
}

TEST(Borel, AgreesWithGeneratedAlgebraOracle) {
  for (const auto& y : all_topologies(3))
    for (const auto& z : all_topologies(2))
      for (const auto& f : all_continuous_maps(y, z)) {
        const auto s = twisted_sum(y, z, f);
        EXPECT_EQ(borel_algebra(s), oracle::generated_algebra(5, s.topology().opens()));
        EXPECT_EQ(borel_algebra(s), product_algebra(y, z));
      }
}

TEST(Sweep, ThreeByThreeHasNoFailures) {
  const auto r = sweep(3, 3);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.instances, 1000u);
  EXPECT_GT(r.discrete_z_instances, 0u);
}

TEST(Sweep, ParallelMatchesSerial) {
  omp_set_num_threads(4);
  EXPECT_EQ(sweep(3, 2), sweep_serial(3, 2));
  EXPECT_EQ(sweep(2, 3), sweep_serial(2, 3));
}

TEST(Enumeration, TopologyCounts) {
  // Number of topologies on 0..4 labelled points.
  const std::vector<std::size_t> counts{1, 1, 4, 29, 355};
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(all_topologies(n).size(), counts[static_cast<std::size_t>(n)]);
}
