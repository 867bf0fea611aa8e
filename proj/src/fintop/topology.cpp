#include <algorithm>
#include <string>
#include <utility>

#include "twisted/error.hpp"
#include "twisted/fintop.hpp"

namespace twisted::fintop {

namespace {

void check_size(int n) {
  require(n >= 0 && n <= kMaxPoints,
          "ground set size " + std::to_string(n) + " outside [0, " +
              std::to_string(kMaxPoints) + "]");
}

// Packs the bits of s selected by part into the low bits.
PointSet compress(PointSet s, PointSet part) {
  PointSet out = 0;
  int k = 0;
  for (int p = 0; p < 32; ++p) {
    if (!contains(part, p)) continue;
    if (contains(s, p)) out |= singleton(k);
    ++k;
  }
  return out;
}

}  // namespace

std::vector<int> members(PointSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

FiniteTopology::FiniteTopology(int n, std::vector<PointSet> opens) : n_(n) {
  check_size(n);
  const PointSet all = full_set(n);
  for (PointSet u : opens)
    require(is_subset(u, all), "open set has a member outside the ground set");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  require(!opens.empty() && opens.front() == 0, "opens must contain the empty set");
  require(std::binary_search(opens.begin(), opens.end(), all),
          "opens must contain the full ground set");
  std::vector<bool> present(std::size_t{1} << n, false);
  for (PointSet u : opens) present[u] = true;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      require(present[opens[i] | opens[j]], "opens not closed under union");
      require(present[opens[i] & opens[j]], "opens not closed under intersection");
    }
  }
  opens_ = std::move(opens);
  index_neighborhoods();
}

FiniteTopology::FiniteTopology(Trusted, int n, std::vector<PointSet> opens)
    : n_(n), opens_(std::move(opens)) {
  index_neighborhoods();
}

void FiniteTopology::index_neighborhoods() {
  min_nbhd_.assign(static_cast<std::size_t>(n_), full());
  for (PointSet u : opens_)
    for (int p : members(u)) min_nbhd_[static_cast<std::size_t>(p)] &= u;
}

FiniteTopology FiniteTopology::from_subbasis(int n,
                                             std::span<const PointSet> subbasis) {
  check_size(n);
  const PointSet all = full_set(n);
  // Finite intersections of subbasis members form a basis, and the smallest
  // basis element around p is the intersection of everything containing p.
  // Every open set is then a union of these minimal neighborhoods.
  std::vector<PointSet> nbhd(static_cast<std::size_t>(n), all);
  for (PointSet s : subbasis) {
    require(is_subset(s, all), "subbasis member has a point outside the ground set");
    for (int p : members(s)) nbhd[static_cast<std::size_t>(p)] &= s;
  }
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<PointSet> opens;
  for (PointSet chosen = 0;; ++chosen) {
    PointSet u = 0;
    for (int p : members(chosen)) u |= nbhd[static_cast<std::size_t>(p)];
    if (!seen[u]) {
      seen[u] = true;
      opens.push_back(u);
    }
    if (chosen == all) break;
  }
  std::sort(opens.begin(), opens.end());
  return FiniteTopology(Trusted{}, n, std::move(opens));
}

FiniteTopology FiniteTopology::discrete(int n) {
  check_size(n);
  std::vector<PointSet> opens(std::size_t{1} << n);
  for (std::size_t i = 0; i < opens.size(); ++i) opens[i] = static_cast<PointSet>(i);
  return FiniteTopology(Trusted{}, n, std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(int n) {
  check_size(n);
  if (n == 0) return FiniteTopology(Trusted{}, 0, {0});
  return FiniteTopology(Trusted{}, n, {0, full_set(n)});
}

bool FiniteTopology::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

PointSet FiniteTopology::minimal_neighborhood(int p) const {
  require(p >= 0 && p < n_, "point out of range");
  return min_nbhd_[static_cast<std::size_t>(p)];
}

PointSet FiniteTopology::closure(PointSet s) const {
  PointSet outside = 0;
  for (PointSet u : opens_)
    if ((u & s) == 0) outside |= u;
  return full() & ~outside;
}

PointSet FiniteTopology::interior(PointSet s) const {
  PointSet inside = 0;
  for (PointSet u : opens_)
    if (is_subset(u, s)) inside |= u;
  return inside;
}

bool FiniteTopology::is_hausdorff() const {
  for (int p = 0; p < n_; ++p)
    for (int q = p + 1; q < n_; ++q)
      if ((min_nbhd_[static_cast<std::size_t>(p)] &
           min_nbhd_[static_cast<std::size_t>(q)]) != 0)
        return false;
  return true;
}

std::vector<PointSet> FiniteTopology::relative_opens(PointSet part) const {
  std::vector<PointSet> out;
  out.reserve(opens_.size());
  for (PointSet u : opens_) out.push_back(compress(u & part, part));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteTopology product(const FiniteTopology& a, const FiniteTopology& b) {
  const int m = b.size();
  check_size(a.size() * m);
  std::vector<PointSet> rectangles;
  for (PointSet u : a.opens()) {
    for (PointSet v : b.opens()) {
      PointSet r = 0;
      for (int i : members(u))
        for (int j : members(v)) r |= singleton(i * m + j);
      rectangles.push_back(r);
    }
  }
  return FiniteTopology::from_subbasis(a.size() * m, rectangles);
}

ContinuousFiniteMap::ContinuousFiniteMap(FiniteTopology source,
                                         FiniteTopology target,
                                         std::vector<int> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  require(values_.size() == static_cast<std::size_t>(source_.size()),
          "map must assign a value to every source point");
  for (int v : values_)
    require(v >= 0 && v < target_.size(), "map value outside the target space");
  for (PointSet w : target_.opens())
    require(source_.is_open(preimage(w)),
            "map is not continuous: preimage of an open set is not open");
}

ContinuousFiniteMap ContinuousFiniteMap::identity(const FiniteTopology& t) {
  std::vector<int> values(static_cast<std::size_t>(t.size()));
  for (int p = 0; p < t.size(); ++p) values[static_cast<std::size_t>(p)] = p;
  return ContinuousFiniteMap(t, t, std::move(values));
}

ContinuousFiniteMap ContinuousFiniteMap::constant(const FiniteTopology& source,
                                                  const FiniteTopology& target,
                                                  int value) {
  return ContinuousFiniteMap(
      source, target, std::vector<int>(static_cast<std::size_t>(source.size()), value));
}

ContinuousFiniteMap ContinuousFiniteMap::first_projection(const FiniteTopology& z) {
  const int m = z.size();
  std::vector<int> values(static_cast<std::size_t>(m * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) values[static_cast<std::size_t>(i * m + j)] = i;
  return ContinuousFiniteMap(product(z, z), z, std::move(values));
}

PointSet ContinuousFiniteMap::preimage(PointSet w) const {
  PointSet out = 0;
  for (std::size_t p = 0; p < values_.size(); ++p)
    if (contains(w, values_[p])) out |= singleton(static_cast<int>(p));
  return out;
}

PointSet ContinuousFiniteMap::image() const {
  PointSet out = 0;
  for (int v : values_) out |= singleton(v);
  return out;
}

}  // namespace twisted::fintop
