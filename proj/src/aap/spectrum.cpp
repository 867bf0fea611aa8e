#include <algorithm>
#include <cmath>

#include "twisted/aap.hpp"
#include "twisted/error.hpp"

namespace twisted::aap {

double reduce_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

TorusPoint torus_point(std::vector<double> angles) {
  for (double& a : angles) a = reduce_angle(a);
  return TorusPoint{std::move(angles)};
}

double angular_distance(double a, double b) {
  const double d = std::abs(reduce_angle(a) - reduce_angle(b));
  return std::min(d, kTwoPi - d);
}

double torus_distance(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size(), "torus points of different dimension");
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, angular_distance(a[j], b[j]));
  return d;
}

TorusPoint natural_map(const FrequencyBasis& basis, double t) {
  std::vector<double> theta(basis.dimension());
  for (std::size_t j = 0; j < theta.size(); ++j)
    theta[j] = reduce_angle(basis.lambda()[j] * t);
  return TorusPoint{std::move(theta)};
}

Complex evaluate_character(const SpectrumPoint& p, const AAPFunction& f) {
  if (const auto* r = std::get_if<RealPoint>(&p)) return f(r->t);
  const auto& torus = std::get<TorusPoint>(p);
  require(torus.theta.size() == f.basis().dimension(),
          "torus point dimension does not match the frequency basis");
  return f.ap.on_torus(torus.theta);
}

bool Arc::contains(double theta) const {
  if (full()) return true;
  const double s = reduce_angle(theta - start);
  return 0.0 < s && s < length;
}

bool basic_open_contains(const BasicOpen& u, const SpectrumPoint& p,
                         const FrequencyBasis& basis) {
  const auto* real = std::get_if<RealPoint>(&p);
  const auto* torus = std::get_if<TorusPoint>(&p);
  if (torus)
    require(torus->theta.size() == basis.dimension(),
            "torus point dimension does not match the frequency basis");

  if (const auto* t1 = std::get_if<Type1>(&u)) {
    if (!real) return false;
    return std::any_of(t1->intervals.begin(), t1->intervals.end(),
                       [&](const OpenInterval& i) { return i.contains(real->t); });
  }
  if (const auto* t2 = std::get_if<Type2>(&u)) {
    if (torus) return true;
    return std::none_of(t2->compact.begin(), t2->compact.end(),
                        [&](const ClosedInterval& k) { return k.contains(real->t); });
  }
  const auto& box = std::get<Type3>(u).box;
  require(box.size() == basis.dimension(), "box dimension does not match the basis");
  const std::vector<double> theta = torus ? torus->theta : natural_map(basis, real->t).theta;
  for (std::size_t j = 0; j < box.size(); ++j)
    if (!box[j].contains(theta[j])) return false;
  return true;
}

bool PeriodicIntervals::contains(double t) const {
  if (whole_line) return true;
  if (empty()) return false;
  const double x = t - offset;
  double r = x - std::floor(x / period) * period;
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return 0.0 < r && r < length;
}

OpenInterval PeriodicIntervals::interval(std::int64_t n) const {
  require(!whole_line, "the preimage is all of ℝ, not a family of intervals");
  const double lo = offset + static_cast<double>(n) * period;
  return {lo, lo + length};
}

PeriodicIntervals type3_preimage_d1(const FrequencyBasis& basis, const Arc& arc) {
  require(basis.dimension() == 1,
          "exact type-3 preimages are only available for one generator");
  const double lambda = basis.lambda()[0];
  PeriodicIntervals out;
  out.period = kTwoPi / lambda;
  if (arc.full()) {
    out.whole_line = true;
    out.length = out.period;
    return out;
  }
  out.offset = reduce_angle(arc.start) / lambda;
  out.length = std::max(0.0, arc.length) / lambda;
  return out;
}

}  // namespace twisted::aap
