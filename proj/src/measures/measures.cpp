#include <algorithm>
#include <limits>

#include "twisted/measures.hpp"

namespace twisted::measures {

using fintop::PointSet;

double measure_of(const FiniteSumMeasure& m, const fintop::SumSpace& space, PointSet s) {
  for (const auto& [p, w] : m.mu_y.atoms())
    require(p >= 0 && p < space.y().size(), "Y-atom outside the Y-space");
  for (const auto& [p, w] : m.mu_z.atoms())
    require(p >= 0 && p < space.z().size(), "Z-atom outside the Z-space");
  const PointSet a = space.y_part(s);
  const PointSet b = space.z_part(s);
  return m.mu_y.measure([a](int p) { return fintop::contains(a, p); }) +
         m.mu_z.measure([b](int p) { return fintop::contains(b, p); });
}

AlgebraMeasure measure_from_atoms(const std::vector<PointSet>& algebra,
                                  const std::vector<double>& atom_weights) {
  const auto atoms = fintop::algebra_atoms(algebra);
  require(atoms.size() == atom_weights.size(), "one weight per atom of the algebra");
  for (double w : atom_weights)
    require(std::isfinite(w) && w >= 0.0, "atom weights must be finite and >= 0");
  AlgebraMeasure mu;
  for (PointSet s : algebra) {
    double v = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (fintop::is_subset(atoms[i], s)) v += atom_weights[i];
    mu[s] = v;
  }
  return mu;
}

FiniteDecomposition decompose_measure(const fintop::SumSpace& space, const AlgebraMeasure& mu) {
  const auto algebra = fintop::borel_algebra(space);
  auto value = [&mu](PointSet s) {
    auto it = mu.find(s);
    require(it != mu.end(), "measure is not defined on the whole Borel algebra");
    return it->second;
  };

  FiniteDecomposition d;
  for (PointSet a : fintop::borel_algebra(space.y())) d.mu_y[a] = value(space.embed(a, 0));
  for (PointSet b : fintop::borel_algebra(space.z())) d.mu_z[b] = value(space.embed(0, b));

  // Exact for dyadic weights; otherwise the two sides associate the same
  // additions differently.
  const double total = value(space.topology().full());
  const double tol = 1e-12 * std::max(1.0, total);
  d.recombines = true;
  for (PointSet s : algebra) {
    auto ya = d.mu_y.find(space.y_part(s));
    auto zb = d.mu_z.find(space.z_part(s));
    const bool ok = ya != d.mu_y.end() && zb != d.mu_z.end() &&
                    std::abs(value(s) - (ya->second + zb->second)) <= tol;
    if (!ok) {
      d.recombines = false;
      d.witness = s;
      break;
    }
  }
  return d;
}

AlgebraMeasure recombine(const fintop::SumSpace& space, const AlgebraMeasure& mu_y,
                         const AlgebraMeasure& mu_z) {
  AlgebraMeasure out;
  for (const auto& [a, wa] : mu_y)
    for (const auto& [b, wb] : mu_z) out[space.embed(a, b)] = wa + wb;
  return out;
}

double measure_of(const ZLineSumMeasure& m, const zline::ZSumSet& s) {
  return m.mu_y.measure([&s](std::int64_t k) { return s.ypart.contains(k); }) +
         m.mu_z.measure([&s](int phi) { return phi >= 0 && fintop::contains(s.zpart, phi); });
}

InnerRegularityReport inner_regularity_check(const ZLineSumMeasure& m,
                                             const zline::TwistedZ& carrier,
                                             const zline::ZSumSet& s) {
  std::vector<std::int64_t> inside;
  for (const auto& [k, w] : m.mu_y.atoms())
    if (s.ypart.contains(k)) inside.push_back(k);

  InnerRegularityReport r;
  r.compact_witness = {zline::PeriodicSet::finite(inside), s.zpart};
  r.measure = measure_of(m, s);
  r.compact_measure = measure_of(m, r.compact_witness);
  r.witness_compact = zline::is_compact(carrier, r.compact_witness).compact;
  r.witness_inside = zline::is_subset(r.compact_witness, s);
  return r;
}

double haar_box(const std::vector<aap::Arc>& box) {
  double v = 1.0;
  for (const auto& arc : box) {
    require(arc.length > 0.0, "arcs must be nonempty");
    v *= std::min(arc.length, aap::kTwoPi) / aap::kTwoPi;
  }
  return v;
}

namespace {

bool arcs_disjoint(const aap::Arc& a, const aap::Arc& b) {
  if (a.full() || b.full()) return false;
  return aap::reduce_angle(b.start - a.start) >= a.length &&
         aap::reduce_angle(a.start - b.start) >= b.length;
}

bool boxes_disjoint(const std::vector<aap::Arc>& a, const std::vector<aap::Arc>& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (arcs_disjoint(a[j], b[j])) return true;
  return false;
}

}  // namespace

double measure_of(const AapSumMeasure& m, const AapSet& s, std::size_t dimension) {
  for (const auto& box : s.boxes)
    require(box.size() == dimension, "box dimension does not match the torus");
  for (std::size_t i = 0; i < s.boxes.size(); ++i)
    for (std::size_t j = i + 1; j < s.boxes.size(); ++j)
      require(boxes_disjoint(s.boxes[i], s.boxes[j]),
              "overlapping boxes are not representable; split them first");
  for (const auto& [p, w] : m.mu_z.atoms.atoms())
    require(p.size() == dimension, "torus atom has the wrong dimension");

  const double y = m.mu_y.measure([&s](double t) {
    return std::any_of(s.intervals.begin(), s.intervals.end(),
                       [t](const aap::OpenInterval& i) { return i.contains(t); });
  });
  double haar = 0.0;
  for (const auto& box : s.boxes) haar += haar_box(box);
  const double z_atoms = m.mu_z.atoms.measure([&s](const std::vector<double>& theta) {
    return std::any_of(s.boxes.begin(), s.boxes.end(), [&theta](const auto& box) {
      for (std::size_t j = 0; j < box.size(); ++j)
        if (!box[j].contains(theta[j])) return false;
      return true;
    });
  });
  return y + m.mu_z.haar_weight * haar + z_atoms;
}

aap::Complex haar_integral(const aap::TrigPolynomial& f1) {
  return f1.coefficient(aap::FrequencyIndex(f1.basis().dimension(), 0));
}

aap::TrigPolynomial translation_action(const aap::TrigPolynomial& f1, double s) {
  std::map<aap::FrequencyIndex, aap::Complex> shifted;
  for (const auto& [k, c] : f1.coefficients()) {
    const bool constant = std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
    shifted.emplace(k, constant ? c : c * std::polar(1.0, f1.basis().frequency(k) * s));
  }
  return aap::TrigPolynomial(f1.basis(), std::move(shifted));
}

}  // namespace twisted::measures
