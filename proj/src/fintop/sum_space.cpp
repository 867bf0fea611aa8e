#include <algorithm>
#include <utility>

#include "twisted/error.hpp"
#include "twisted/fintop.hpp"

namespace twisted::fintop {

SumSpace::SumSpace(FiniteTopology y, FiniteTopology z, FiniteTopology topology,
                   SumFlavor flavor, std::optional<ContinuousFiniteMap> map)
    : y_(std::move(y)),
      z_(std::move(z)),
      topology_(std::move(topology)),
      flavor_(flavor),
      map_(std::move(map)) {}

SumSpace twisted_sum(const FiniteTopology& y, const FiniteTopology& z,
                     const ContinuousFiniteMap& f) {
  require(f.source() == y && f.target() == z,
          "twisting map must go from the Y-space to the Z-space");
  const int n = y.size();
  require(n + z.size() <= kMaxPoints, "sum space exceeds the ground-set cap");
  std::vector<PointSet> subbasis;
  const PointSet zblock = z.full() << n;
  for (PointSet v : y.opens()) {
    subbasis.push_back(v);           // type 1
    subbasis.push_back(v | zblock);  // type 2: ∁K for the closed K = Y \ V
  }
  for (PointSet w : z.opens())
    subbasis.push_back(f.preimage(w) | (w << n));  // type 3
  auto topology = FiniteTopology::from_subbasis(n + z.size(), subbasis);
  return SumSpace(y, z, std::move(topology), SumFlavor::twisted, f);
}

SumSpace direct_sum(const FiniteTopology& y, const FiniteTopology& z) {
  const int n = y.size();
  require(n + z.size() <= kMaxPoints, "sum space exceeds the ground-set cap");
  std::vector<PointSet> subbasis(y.opens());
  for (PointSet w : z.opens()) subbasis.push_back(w << n);
  auto topology = FiniteTopology::from_subbasis(n + z.size(), subbasis);
  return SumSpace(y, z, std::move(topology), SumFlavor::direct, std::nullopt);
}

std::vector<BasisElement> standard_basis(const SumSpace& s) {
  require(s.flavor() == SumFlavor::twisted && s.map().has_value(),
          "standard basis is defined for twisted sums");
  const auto& f = *s.map();
  std::vector<BasisElement> out;
  std::vector<PointSet> seen;
  auto add = [&](BasisElement e) {
    if (std::find(seen.begin(), seen.end(), e.set) != seen.end()) return;
    seen.push_back(e.set);
    out.push_back(e);
  };
  for (PointSet v : s.y().opens())
    add({BasisElement::Kind::type1, v, 0, v});
  for (PointSet v : s.y().opens()) {
    for (PointSet w : s.z().opens()) {
      PointSet ypart = v & f.preimage(w);
      add({BasisElement::Kind::type23, v, w, s.embed(ypart, w)});
    }
  }
  return out;
}

std::optional<std::vector<BasisElement>> basis_decomposition(const SumSpace& s,
                                                             PointSet u) {
  if (s.flavor() != SumFlavor::twisted || !s.topology().is_open(u)) return std::nullopt;
  std::vector<BasisElement> inside;
  for (const auto& e : standard_basis(s))
    if (e.set != 0 && is_subset(e.set, u)) inside.push_back(e);

  std::vector<BasisElement> chosen;
  PointSet uncovered = u;
  while (uncovered != 0) {
    const BasisElement* best = nullptr;
    int gain = 0;
    for (const auto& e : inside) {
      int g = cardinality(e.set & uncovered);
      if (g > gain) {
        gain = g;
        best = &e;
      }
    }
    if (best == nullptr)
      throw InvariantError("open set is not a union of type-1 and type-23 sets");
    chosen.push_back(*best);
    uncovered &= ~best->set;
  }
  return chosen;
}

std::vector<PointSet> borel_algebra(const FiniteTopology& t) {
  // Two points are inseparable by the algebra iff no open set separates them,
  // i.e. each lies in the other's minimal neighborhood.
  const int n = t.size();
  std::vector<PointSet> atoms;
  PointSet assigned = 0;
  for (int p = 0; p < n; ++p) {
    if (contains(assigned, p)) continue;
    PointSet atom = 0;
    for (int q = p; q < n; ++q)
      if (contains(t.minimal_neighborhood(p), q) && contains(t.minimal_neighborhood(q), p))
        atom |= singleton(q);
    atoms.push_back(atom);
    assigned |= atom;
  }
  std::vector<PointSet> out;
  out.reserve(std::size_t{1} << atoms.size());
  for (std::size_t chosen = 0; chosen < (std::size_t{1} << atoms.size()); ++chosen) {
    PointSet a = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if ((chosen >> i) & 1u) a |= atoms[i];
    out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointSet> borel_algebra(const SumSpace& s) {
  return borel_algebra(s.topology());
}

std::vector<PointSet> product_algebra(const FiniteTopology& y,
                                      const FiniteTopology& z) {
  std::vector<PointSet> out;
  for (PointSet a : borel_algebra(y))
    for (PointSet b : borel_algebra(z)) out.push_back(a | (b << y.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointSet> algebra_atoms(const std::vector<PointSet>& algebra) {
  std::vector<PointSet> atoms;
  for (PointSet a : algebra) {
    if (a == 0) continue;
    bool minimal = std::none_of(algebra.begin(), algebra.end(), [a](PointSet b) {
      return b != 0 && b != a && is_subset(b, a);
    });
    if (minimal) atoms.push_back(a);
  }
  return atoms;
}

}  // namespace twisted::fintop
