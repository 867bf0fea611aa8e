#pragma once

// Independent reference computations used by the tests. Deliberately naive:
// nothing here shares code with the library beyond the PointSet encoding.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "twisted/fintop.hpp"
#include "twisted/periodic_set.hpp"

namespace oracle {

using twisted::fintop::PointSet;

// Smallest family containing `family`, ∅ and the full set, closed under
// pairwise union and intersection, by iterating to a fixpoint.
inline std::vector<PointSet> lattice_closure(int n, const std::vector<PointSet>& family) {
  std::set<PointSet> s(family.begin(), family.end());
  s.insert(0);
  s.insert(n == 0 ? 0u : (1u << n) - 1u);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<PointSet> cur(s.begin(), s.end());
    for (PointSet a : cur)
      for (PointSet b : cur) {
        grew |= s.insert(a | b).second;
        grew |= s.insert(a & b).second;
      }
  }
  return {s.begin(), s.end()};
}

// The twisted-sum opens straight from the three kinds of generating sets.
inline std::vector<PointSet> twisted_opens(const std::vector<PointSet>& y_opens, int n,
                                           const std::vector<PointSet>& z_opens, int m,
                                           const std::vector<int>& f) {
  const PointSet zfull = (m == 0 ? 0u : (1u << m) - 1u) << n;
  std::vector<PointSet> gen;
  for (PointSet v : y_opens) {
    gen.push_back(v);          // V ⊔ ∅
    gen.push_back(v | zfull);  // ∁K ⊔ Z with K = Y \ V closed
  }
  for (PointSet w : z_opens) {
    PointSet pre = 0;
    for (int p = 0; p < n; ++p)
      if ((w >> f[p]) & 1u) pre |= 1u << p;
    gen.push_back(pre | (w << n));
  }
  return lattice_closure(n + m, gen);
}

inline std::vector<PointSet> direct_opens(const std::vector<PointSet>& y_opens, int n,
                                          const std::vector<PointSet>& z_opens) {
  std::set<PointSet> s;
  for (PointSet v : y_opens)
    for (PointSet w : z_opens) s.insert(v | (w << n));
  return {s.begin(), s.end()};
}

inline bool is_open(const std::vector<PointSet>& opens, PointSet s) {
  return std::find(opens.begin(), opens.end(), s) != opens.end();
}

inline PointSet closure(const std::vector<PointSet>& opens, int n, PointSet s) {
  PointSet outside = 0;
  for (PointSet u : opens)
    if ((u & s) == 0) outside |= u;
  return ((n == 0 ? 0u : (1u << n) - 1u)) & ~outside;
}

inline PointSet interior(const std::vector<PointSet>& opens, PointSet s) {
  PointSet in = 0;
  for (PointSet u : opens)
    if ((u & ~s) == 0) in |= u;
  return in;
}

inline bool hausdorff(const std::vector<PointSet>& opens, int n) {
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      bool separated = false;
      for (PointSet u : opens)
        for (PointSet v : opens)
          if (((u >> p) & 1u) && ((v >> q) & 1u) && (u & v) == 0) separated = true;
      if (!separated) return false;
    }
  return true;
}

// Algebra generated by `opens` under complement and finite union.
inline std::vector<PointSet> generated_algebra(int n, const std::vector<PointSet>& opens) {
  const PointSet full = n == 0 ? 0u : (1u << n) - 1u;
  std::set<PointSet> s(opens.begin(), opens.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<PointSet> cur(s.begin(), s.end());
    for (PointSet a : cur) {
      grew |= s.insert(full & ~a).second;
      for (PointSet b : cur) grew |= s.insert(a | b).second;
    }
  }
  return {s.begin(), s.end()};
}

// Every family of subsets of {0..n-1} that is a topology, by brute force
// over all families (n <= 3).
inline std::vector<std::vector<PointSet>> all_topologies(int n) {
  const int subsets = 1 << n;
  const PointSet full = n == 0 ? 0u : (1u << n) - 1u;
  std::vector<std::vector<PointSet>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << subsets); ++mask) {
    std::vector<PointSet> fam;
    for (int s = 0; s < subsets; ++s)
      if ((mask >> s) & 1u) fam.push_back(static_cast<PointSet>(s));
    if (!is_open(fam, 0) || !is_open(fam, full)) continue;
    bool ok = true;
    for (PointSet a : fam)
      for (PointSet b : fam) ok = ok && is_open(fam, a | b) && is_open(fam, a & b);
    if (ok) out.push_back(fam);
  }
  return out;
}

// Membership of a periodic set description, straight from its definition.
struct RawPeriodic {
  std::int64_t m;
  std::vector<std::int64_t> residues, added, removed;
  bool contains(std::int64_t k) const {
    if (std::find(added.begin(), added.end(), k) != added.end()) return true;
    if (std::find(removed.begin(), removed.end(), k) != removed.end()) return false;
    const std::int64_t r = ((k % m) + m) % m;
    return std::find(residues.begin(), residues.end(), r) != residues.end();
  }
};

inline RawPeriodic random_raw(std::mt19937_64& rng, int max_modulus = 8, int spread = 30) {
  std::uniform_int_distribution<int> mod(1, max_modulus), coin(0, 1), pts(-spread, spread),
      count(0, 4);
  RawPeriodic r;
  r.m = mod(rng);
  for (std::int64_t k = 0; k < r.m; ++k)
    if (coin(rng)) r.residues.push_back(k);
  for (int i = count(rng); i > 0; --i) r.added.push_back(pts(rng));
  for (int i = count(rng); i > 0; --i) r.removed.push_back(pts(rng));
  // added wins over removed, as in the library's constructor contract
  std::erase_if(r.removed, [&](std::int64_t k) {
    return std::find(r.added.begin(), r.added.end(), k) != r.added.end();
  });
  return r;
}

inline twisted::zline::PeriodicSet build(const RawPeriodic& r) {
  return twisted::zline::PeriodicSet(r.m, r.residues, r.added, r.removed);
}

// Window wide enough that every exception and a few full periods are inside.
inline std::int64_t window(std::int64_t m) { return 4 * m * 840 + 64; }

}  // namespace oracle
