#include <algorithm>

#include "twisted/fintop.hpp"

namespace twisted::fintop {

std::vector<FiniteTopology> all_topologies(int n) {
  std::vector<FiniteTopology> out;
  const PointSet all = full_set(n);
  std::vector<PointSet> middle;  // subsets other than ∅ and the full set
  for (PointSet s = 1; s < all; ++s) middle.push_back(s);

  const std::size_t choices = std::size_t{1} << middle.size();
  std::vector<bool> present(std::size_t{1} << n);
  for (std::size_t pick = 0; pick < choices; ++pick) {
    std::vector<PointSet> opens{0};
    if (all != 0) opens.push_back(all);
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((pick >> i) & 1u) opens.push_back(middle[i]);
    std::fill(present.begin(), present.end(), false);
    for (PointSet u : opens) present[u] = true;
    bool closed = true;
    for (std::size_t i = 0; i < opens.size() && closed; ++i)
      for (std::size_t j = i + 1; j < opens.size() && closed; ++j)
        closed = present[opens[i] | opens[j]] && present[opens[i] & opens[j]];
    if (closed) out.emplace_back(n, std::move(opens));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.opens() < b.opens();
  });
  return out;
}

std::vector<ContinuousFiniteMap> all_continuous_maps(const FiniteTopology& y,
                                                     const FiniteTopology& z) {
  std::vector<ContinuousFiniteMap> out;
  const int n = y.size();
  const int m = z.size();
  if (m == 0 && n > 0) return out;
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  while (true) {
    bool continuous = true;
    for (PointSet w : z.opens()) {
      PointSet pre = 0;
      for (int p = 0; p < n; ++p)
        if (contains(w, values[static_cast<std::size_t>(p)])) pre |= singleton(p);
      if (!y.is_open(pre)) {
        continuous = false;
        break;
      }
    }
    if (continuous) out.emplace_back(y, z, values);
    // odometer increment
    int p = 0;
    while (p < n && ++values[static_cast<std::size_t>(p)] == m) {
      values[static_cast<std::size_t>(p)] = 0;
      ++p;
    }
    if (p == n) break;
  }
  return out;
}

namespace {

struct InstanceOutcome {
  std::vector<std::string> failed;
  std::size_t decomposed = 0;
};

InstanceOutcome check_instance(const ContinuousFiniteMap& f) {
  const auto& y = f.source();
  const auto& z = f.target();
  InstanceOutcome out;
  auto expect = [&](bool ok, const char* property) {
    if (!ok) out.failed.emplace_back(property);
  };

  const SumSpace tw = twisted_sum(y, z, f);
  const SumSpace di = direct_sum(y, z);
  const auto& t = tw.topology();

  expect(std::all_of(t.opens().begin(), t.opens().end(),
                     [&](PointSet u) { return di.topology().is_open(u); }),
         "twisted opens contained in direct opens");
  expect(t.relative_opens(tw.y_block()) == y.opens(), "relative topology on Y");
  expect(t.relative_opens(tw.z_block()) == z.opens(), "relative topology on Z");
  expect(t.is_open(tw.y_block()), "Y open");
  expect(t.is_closed(tw.z_block()), "Z closed");

  bool basis_ok = true;
  for (PointSet u : t.opens()) {
    auto parts = basis_decomposition(tw, u);
    PointSet joined = 0;
    if (parts)
      for (const auto& e : *parts) joined |= e.set;
    basis_ok = basis_ok && parts.has_value() && joined == u;
    ++out.decomposed;
  }
  expect(basis_ok, "basis decomposition");

  const DiagramReport report = check_diagram(y, z, f);
  expect(report.consistent(), "implication diagram");
  expect(nicely_covered(f) == nicely_covered_exhaustive(f),
         "statement (6): minimal-neighborhood cover vs open search");
  expect(t.is_hausdorff() == (y.is_discrete() && z.is_discrete()),
         "Hausdorff criterion");

  const auto borel = borel_algebra(tw);
  expect(borel == borel_algebra(di) && borel == product_algebra(y, z),
         "Borel algebra equality");
  return out;
}

std::vector<ContinuousFiniteMap> enumerate_instances(int max_y, int max_z) {
  std::vector<ContinuousFiniteMap> instances;
  for (int n = 0; n <= max_y; ++n)
    for (const auto& y : all_topologies(n))
      for (int m = 0; m <= max_z; ++m)
        for (const auto& z : all_topologies(m))
          for (auto& f : all_continuous_maps(y, z)) instances.push_back(std::move(f));
  return instances;
}

SweepReport assemble(const std::vector<ContinuousFiniteMap>& instances,
                     const std::vector<InstanceOutcome>& outcomes) {
  SweepReport report;
  report.instances = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& f = instances[i];
    if (f.target().is_discrete()) ++report.discrete_z_instances;
    report.opens_decomposed += outcomes[i].decomposed;
    for (const auto& property : outcomes[i].failed)
      report.failures.push_back({i, property, f.source(), f.target(), f.values()});
  }
  return report;
}

}  // namespace

SweepReport sweep(int max_y, int max_z) {
  const auto instances = enumerate_instances(max_y, max_z);
  std::vector<InstanceOutcome> outcomes(instances.size());
  const auto count = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i)
    outcomes[static_cast<std::size_t>(i)] =
        check_instance(instances[static_cast<std::size_t>(i)]);
  return assemble(instances, outcomes);
}

SweepReport sweep_serial(int max_y, int max_z) {
  const auto instances = enumerate_instances(max_y, max_z);
  std::vector<InstanceOutcome> outcomes;
  outcomes.reserve(instances.size());
  for (const auto& f : instances) outcomes.push_back(check_instance(f));
  return assemble(instances, outcomes);
}

}  // namespace twisted::fintop
