#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twisted/error.hpp"
#include "twisted/zline.hpp"

using namespace twisted;
using namespace twisted::zline;

namespace {

PeriodicSet evens() { return PeriodicSet::residue_class(2, 0); }
PeriodicSet odds() { return PeriodicSet::residue_class(2, 1); }

// ℤ → discrete {e, o} by parity.
TwistedZ parity_model() {
  TwistedZ t(PeriodicMap(FiniteTopology::discrete(2), 2, {0, 1}));
  t.labels = {"e", "o"};
  return t;
}

FiniteTopology sierpinski() { return FiniteTopology(2, {0b00, 0b01, 0b11}); }

TwistedZ random_model(std::mt19937_64& rng) {
  const int m = 1 + static_cast<int>(rng() % 3);
  const auto tops = fintop::all_topologies(m);
  const auto& z = tops[rng() % tops.size()];
  const int modulus = 1 + static_cast<int>(rng() % 4);
  std::vector<int> values(static_cast<std::size_t>(modulus));
  for (auto& v : values) v = static_cast<int>(rng() % static_cast<unsigned>(m));
  std::map<std::int64_t, int> exceptions;
  for (int i = static_cast<int>(rng() % 3); i > 0; --i)
    exceptions[static_cast<std::int64_t>(rng() % 21) - 10] = static_cast<int>(rng() % static_cast<unsigned>(m));
  return TwistedZ(PeriodicMap(z, modulus, values, exceptions));
}

ZSumSet random_set(std::mt19937_64& rng, const TwistedZ& t) {
  return {oracle::build(oracle::random_raw(rng, 6, 12)),
          static_cast<PointSet>(rng()) & t.z_full()};
}

}  // namespace

TEST(PeriodicSet, MembershipMatchesWindowOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto raw = oracle::random_raw(rng);
    const auto s = oracle::build(raw);
    const std::int64_t w = oracle::window(raw.m);
    for (std::int64_t k = -w; k <= w; ++k) ASSERT_EQ(s.contains(k), raw.contains(k)) << k;
  }
}

TEST(PeriodicSet, BooleanAlgebraMatchesPointwise) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ra = oracle::random_raw(rng), rb = oracle::random_raw(rng);
    const auto a = oracle::build(ra), b = oracle::build(rb);
    const auto u = a | b, i = a & b, d = a - b, c = a.complement();
    const std::int64_t w = oracle::window(std::lcm(ra.m, rb.m));
    for (std::int64_t k = -w; k <= w; k += 7) {
      ASSERT_EQ(u.contains(k), ra.contains(k) || rb.contains(k));
      ASSERT_EQ(i.contains(k), ra.contains(k) && rb.contains(k));
      ASSERT_EQ(d.contains(k), ra.contains(k) && !rb.contains(k));
      ASSERT_EQ(c.contains(k), !ra.contains(k));
    }
    EXPECT_EQ(c.complement(), a);
    EXPECT_EQ((a | b).complement(), a.complement() & b.complement());
    EXPECT_EQ((a & b).complement(), a.complement() | b.complement());
  }
}

TEST(PeriodicSet, CanonicalForm) {
  // {0,2} mod 4 is the evens; equality is structural
  EXPECT_EQ(PeriodicSet(4, {0, 2}), evens());
  EXPECT_EQ(PeriodicSet(4, {0, 2}).modulus(), 2);
  EXPECT_EQ(PeriodicSet(2, {0}, {1}, {}), PeriodicSet(2, {0}, {1}, {2, 2}) | PeriodicSet::finite({2}));
  EXPECT_TRUE(PeriodicSet::finite({3, 1}).is_finite());
  EXPECT_EQ(PeriodicSet::finite({3, 1}).elements(), (std::vector<std::int64_t>{1, 3}));
  EXPECT_TRUE(PeriodicSet::finite({3}).complement().is_cofinite());
  EXPECT_TRUE(PeriodicSet{}.is_empty());
  EXPECT_THROW((void)evens().elements(), InputError);
  EXPECT_THROW(PeriodicSet(0, {}), InputError);
  EXPECT_THROW(PeriodicSet(3, {3}), InputError);
}

TEST(Preimage, Examples) {
  const auto point = FiniteTopology::discrete(1);
  const auto c = PeriodicMap::constant(point, 0);
  EXPECT_EQ(preimage(c, 0b1), PeriodicSet::all());
  EXPECT_TRUE(preimage(c, 0).is_empty());
  const PeriodicMap parity(FiniteTopology::discrete(2), 2, {0, 1});
  EXPECT_EQ(preimage(parity, 0b01), evens());
}

TEST(Preimage, Exceptions) {
  const PeriodicMap f(FiniteTopology::discrete(2), 1, {0}, {{5, 1}, {-2, 0}});
  EXPECT_EQ(f(5), 1);
  EXPECT_EQ(f(-2), 0);
  EXPECT_EQ(f.exceptions().size(), 1u);  // -2 -> 0 is redundant
  EXPECT_EQ(preimage(f, 0b10), PeriodicSet::finite({5}));
  EXPECT_THROW(PeriodicMap(FiniteTopology::discrete(2), 1, {2}), InputError);
}

TEST(IsOpen, Examples) {
  const auto one = one_point_model();
  EXPECT_TRUE(is_open(one, {evens(), 0}).open);
  EXPECT_TRUE(is_open(one, {PeriodicSet::finite({1, 4}).complement(), 1}).open);
  const auto v = is_open(one, {evens(), 1});
  EXPECT_FALSE(v.open);
  ASSERT_TRUE(v.witness_point.has_value());
  EXPECT_EQ(*v.witness_point, 0);
  ASSERT_TRUE(v.witness_defect.has_value());
  EXPECT_EQ(*v.witness_defect, odds());

  // every residue class hits Z, so ∅ ⊔ Z is not open
  EXPECT_FALSE(is_open(parity_model(), {PeriodicSet{}, 0b11}).open);
}

TEST(IsOpen, DecompositionIsExact) {
  std::mt19937_64 rng(21);
  for (int model = 0; model < 30; ++model) {
    const auto t = random_model(rng);
    for (int q = 0; q < 40; ++q) {
      const auto s = random_set(rng, t);
      const auto v = is_open(t, s);
      if (!v.open) continue;
      for (const auto& e : v.decomposition) EXPECT_TRUE(is_basis_element(t, e));
      EXPECT_EQ(union_of(v.decomposition), s);
    }
  }
}

TEST(IsOpen, MatchesExhaustiveWindowChoices) {
  // s is open iff every φ ∈ zpart has some open W ∋ φ, W ⊆ zpart, with
  // f⁻¹(W) \ ypart finite; checked over all W rather than the minimal one.
  std::mt19937_64 rng(22);
  for (int model = 0; model < 40; ++model) {
    const auto t = random_model(rng);
    for (int q = 0; q < 30; ++q) {
      const auto s = random_set(rng, t);
      bool expected = t.z().is_open(s.zpart);
      for (int phi : fintop::members(s.zpart)) {
        bool some = false;
        for (PointSet w : t.z().opens())
          if (fintop::contains(w, phi) && fintop::is_subset(w, s.zpart) &&
              (t.preimage(w) - s.ypart).is_finite())
            some = true;
        expected = expected && some;
      }
      EXPECT_EQ(is_open(t, s).open, expected);
    }
  }
}

TEST(RelativeTopology, BlocksCarryTheirTopologies) {
  std::mt19937_64 rng(23);
  for (int model = 0; model < 20; ++model) {
    const auto t = random_model(rng);
    for (int q = 0; q < 10; ++q) EXPECT_TRUE(is_open(t, {random_set(rng, t).ypart, 0}).open);
    // W open in z iff f⁻¹(W) ⊔ W is open
    for (PointSet w = 0; w <= t.z_full(); ++w)
      EXPECT_EQ(is_open(t, {t.preimage(w), w}).open, t.z().is_open(w));
  }
}

TEST(Closure, Examples) {
  const auto one = one_point_model();
  EXPECT_EQ(closure(one, {evens(), 0}), (ZSumSet{evens(), 1}));
  const auto finite = PeriodicSet::finite({-3, 8});
  EXPECT_EQ(closure(one, {finite, 0}), (ZSumSet{finite, 0}));
  const TwistedZ t(PeriodicMap(sierpinski(), 1, {0}));
  EXPECT_EQ(closure(t, {PeriodicSet{}, 0b01}), (ZSumSet{PeriodicSet{}, 0b11}));
}

TEST(Closure, KuratowskiProperties) {
  std::mt19937_64 rng(24);
  for (int model = 0; model < 30; ++model) {
    const auto t = random_model(rng);
    for (int q = 0; q < 20; ++q) {
      const auto s = random_set(rng, t);
      const auto other = random_set(rng, t);
      const auto c = closure(t, s);
      const auto i = interior(t, s);
      EXPECT_EQ(closure(t, c), c);
      EXPECT_TRUE(is_subset(s, c));
      EXPECT_TRUE(is_subset(i, s));
      EXPECT_TRUE(is_open(t, i).open);
      EXPECT_TRUE(is_closed(t, c));
      EXPECT_EQ(interior(t, s), complement(t, closure(t, complement(t, s))));
      const auto both = unite(s, other);
      EXPECT_TRUE(is_subset(c, closure(t, both)));
      EXPECT_EQ(is_open(t, s).open, interior(t, s) == s);
    }
  }
}

TEST(Compact, Examples) {
  const auto one = one_point_model();
  EXPECT_TRUE(is_compact(one, {PeriodicSet::all(), 1}).compact);
  const auto line = is_compact(one, {PeriodicSet::all(), 0});
  EXPECT_FALSE(line.compact);
  EXPECT_EQ(line.uncovered, PeriodicSet::all());
  EXPECT_TRUE(is_compact(one, {PeriodicSet::finite({1, 2, 3}), 0}).compact);
  EXPECT_TRUE(is_compact(one, {evens(), 1}).compact);
}

TEST(Compact, Properties) {
  std::mt19937_64 rng(25);
  for (int model = 0; model < 30; ++model) {
    const auto t = random_model(rng);
    EXPECT_TRUE(is_compact(t, {PeriodicSet::all(), t.z_full()}).compact);
    EXPECT_FALSE(is_compact(t, {PeriodicSet::all(), 0}).compact);
    for (int q = 0; q < 20; ++q) {
      const auto a = random_set(rng, t), b = random_set(rng, t);
      EXPECT_TRUE(is_compact(t, {PeriodicSet::finite({0, 5}), a.zpart}).compact);
      if (is_compact(t, a).compact && is_compact(t, b).compact)
        EXPECT_TRUE(is_compact(t, unite(a, b)).compact);
    }
  }
}

TEST(Hausdorff, Examples) {
  EXPECT_TRUE(is_hausdorff(one_point_model()));
  EXPECT_FALSE(is_hausdorff(TwistedZ(PeriodicMap(sierpinski(), 1, {0}))));
  EXPECT_TRUE(is_hausdorff(TwistedZ(PeriodicMap(FiniteTopology::discrete(3), 3, {2, 0, 1}))));
}

TEST(SumsCoincide, Examples) {
  const auto r = sums_coincide(one_point_model());
  EXPECT_FALSE(r.coincide());
  EXPECT_TRUE(r.agree());
  const auto empty = sums_coincide(TwistedZ::without_boundary());
  EXPECT_TRUE(empty.coincide());
  EXPECT_TRUE(empty.agree());
  std::mt19937_64 rng(26);
  for (int model = 0; model < 30; ++model) {
    const auto s = sums_coincide(random_model(rng));
    EXPECT_FALSE(s.coincide());
    EXPECT_TRUE(s.agree());
  }
}

TEST(Limits, Examples) {
  const auto one = limit_points(one_point_model(), 0, 1);
  ASSERT_TRUE(one.converges.has_value());
  EXPECT_EQ(*one.converges, 0);

  const auto parity = parity_model();
  const auto even = limit_points(parity, 0, 2);
  ASSERT_TRUE(even.converges.has_value());
  EXPECT_EQ(*even.converges, 0);
  const auto all = limit_points(parity, 0, 1);
  EXPECT_EQ(all.limit_set, 0u);
  EXPECT_FALSE(all.converges.has_value());
  EXPECT_THROW(limit_points(parity, 0, 0), InputError);
}

TEST(Limits, NonHausdorffLimitSets) {
  // Sierpiński Z = {a, b} with {a} open: a sequence living at a converges
  // to both a and b, so there is a limit set but no unique limit.
  const TwistedZ t(PeriodicMap(sierpinski(), 1, {0}));
  const auto r = limit_points(t, 3, 1);
  EXPECT_EQ(r.limit_set, 0b11u);
  EXPECT_FALSE(r.converges.has_value());
}

TEST(OnePoint, ClassicalOpenSets) {
  const auto one = one_point_model();
  std::mt19937_64 rng(27);
  for (int q = 0; q < 500; ++q) {
    const auto a = oracle::build(oracle::random_raw(rng));
    EXPECT_TRUE(is_open(one, {a, 0}).open);
    EXPECT_EQ(is_open(one, {a, 1}).open, a.is_cofinite());
  }
}
