#include <algorithm>
#include <bit>

#include "twisted/error.hpp"
#include "twisted/zline.hpp"

namespace twisted::zline {

using fintop::members;

PeriodicSet TwistedZ::preimage(PointSet b) const {
  if (!f_) return PeriodicSet{};
  return zline::preimage(*f_, b);
}

TwistedZ one_point_model() {
  const FiniteTopology point = FiniteTopology::discrete(1);
  TwistedZ t(PeriodicMap::constant(point, 0));
  t.labels = {"∞"};
  return t;
}

ZSumSet complement(const TwistedZ& t, const ZSumSet& s) {
  return {s.ypart.complement(), t.z_full() & ~s.zpart};
}

ZSumSet unite(const ZSumSet& a, const ZSumSet& b) {
  return {a.ypart | b.ypart, a.zpart | b.zpart};
}

ZSumSet intersect(const ZSumSet& a, const ZSumSet& b) {
  return {a.ypart & b.ypart, a.zpart & b.zpart};
}

bool is_subset(const ZSumSet& a, const ZSumSet& b) {
  return a.ypart.is_subset_of(b.ypart) && fintop::is_subset(a.zpart, b.zpart);
}

bool is_basis_element(const TwistedZ& t, const ZBasisElement& e) {
  if (e.kind == ZBasisElement::Kind::type1) return e.w == 0 && e.removed.empty();
  if (!t.z().is_open(e.w)) return false;
  return e.ypart == t.preimage(e.w) - PeriodicSet::finite(e.removed);
}

ZSumSet union_of(const std::vector<ZBasisElement>& parts) {
  ZSumSet out;
  for (const auto& e : parts) {
    out.ypart = out.ypart | e.ypart;
    out.zpart |= e.w;
  }
  return out;
}

namespace {

void check_zpart(const TwistedZ& t, PointSet zpart) {
  require(fintop::is_subset(zpart, t.z_full()), "Z-part has points outside Z");
}

}  // namespace

OpenVerdict is_open(const TwistedZ& t, const ZSumSet& s) {
  check_zpart(t, s.zpart);
  OpenVerdict v;
  for (int phi : members(s.zpart)) {
    if (!fintop::is_subset(t.z().minimal_neighborhood(phi), s.zpart)) {
      v.witness_point = phi;
      v.reason = "Z-part is not open in Z";
      return v;
    }
  }
  std::vector<PeriodicSet> defects;
  for (int phi : members(s.zpart)) {
    PeriodicSet defect = t.preimage(t.z().minimal_neighborhood(phi)) - s.ypart;
    if (!defect.is_finite()) {
      v.witness_point = phi;
      v.witness_defect = std::move(defect);
      v.reason = "infinitely many points of f⁻¹(U_φ) are missing from the ℤ-part";
      return v;
    }
    defects.push_back(std::move(defect));
  }

  v.open = true;
  if (!s.ypart.is_empty())
    v.decomposition.push_back({ZBasisElement::Kind::type1, s.ypart, 0, {}});
  std::vector<PointSet> windows_used;
  const auto zs = members(s.zpart);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const PointSet window = t.z().minimal_neighborhood(zs[i]);
    if (std::find(windows_used.begin(), windows_used.end(), window) != windows_used.end())
      continue;
    windows_used.push_back(window);
    const auto& k = defects[i].elements();
    v.decomposition.push_back({ZBasisElement::Kind::type23,
                               t.preimage(window) - PeriodicSet::finite(k), window, k});
  }
  if (union_of(v.decomposition) != s)
    throw InvariantError("open-set decomposition does not reproduce the input");
  return v;
}

bool is_closed(const TwistedZ& t, const ZSumSet& s) {
  return is_open(t, complement(t, s)).open;
}

ZSumSet closure(const TwistedZ& t, const ZSumSet& s) {
  check_zpart(t, s.zpart);
  PointSet zc = t.z().closure(s.zpart);
  for (int phi = 0; phi < t.z().size(); ++phi)
    if (!(t.preimage(t.z().minimal_neighborhood(phi)) & s.ypart).is_finite())
      zc |= fintop::singleton(phi);
  return {s.ypart, zc};
}

ZSumSet interior(const TwistedZ& t, const ZSumSet& s) {
  check_zpart(t, s.zpart);
  PointSet zi = 0;
  for (int phi : members(s.zpart)) {
    const PointSet window = t.z().minimal_neighborhood(phi);
    if (fintop::is_subset(window, s.zpart) && (t.preimage(window) - s.ypart).is_finite())
      zi |= fintop::singleton(phi);
  }
  return {s.ypart, zi};
}

CompactVerdict is_compact(const TwistedZ& t, const ZSumSet& s) {
  check_zpart(t, s.zpart);
  PointSet windows = 0;
  for (int phi : members(s.zpart)) windows |= t.z().minimal_neighborhood(phi);
  CompactVerdict v;
  v.uncovered = s.ypart - t.preimage(windows);
  v.compact = v.uncovered.is_finite();
  return v;
}

bool is_hausdorff(const TwistedZ& t) {
  constexpr bool y_locally_compact = true;
  constexpr bool y_hausdorff = true;
  return y_locally_compact && y_hausdorff && t.z().is_hausdorff();
}

CoincideReport sums_coincide(const TwistedZ& t) {
  CoincideReport r;
  r.direct_opens_twisted = true;
  for (PointSet w : t.z().opens())
    r.direct_opens_twisted = r.direct_opens_twisted && is_open(t, {PeriodicSet{}, w}).open;
  r.z_block_open = is_open(t, {PeriodicSet{}, t.z_full()}).open;
  r.nicely_covered = true;
  for (int phi = 0; phi < t.z().size(); ++phi) {
    bool found = false;
    for (PointSet w : t.z().opens())
      found = found || (fintop::contains(w, phi) && t.preimage(w).is_finite());
    r.nicely_covered = r.nicely_covered && found;
  }
  if (!r.agree())
    throw InvariantError("statements (1), (5), (6) disagree on a ℤ-model");
  return r;
}

LimitReport limit_points(const TwistedZ& t, std::int64_t start, std::int64_t step) {
  require(step >= 1, "progression step must be positive");
  LimitReport r;
  if (!t.map()) return r;
  r.recurring_values = t.map()->recurring_values(start, step);
  for (int phi = 0; phi < t.z().size(); ++phi)
    if (fintop::is_subset(r.recurring_values, t.z().minimal_neighborhood(phi)))
      r.limit_set |= fintop::singleton(phi);
  if (is_hausdorff(t) && std::popcount(r.limit_set) == 1)
    r.converges = std::countr_zero(r.limit_set);
  return r;
}

}  // namespace twisted::zline
