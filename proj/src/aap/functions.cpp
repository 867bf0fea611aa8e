#include <algorithm>
#include <cmath>

#include "twisted/aap.hpp"
#include "twisted/error.hpp"

namespace twisted::aap {

namespace {

Complex unit_phase(double angle) { return std::polar(1.0, angle); }

int l1(const FrequencyIndex& k) {
  int s = 0;
  for (int c : k) s += std::abs(c);
  return s;
}

// ∫_{-∞}^{x} max(0, 1 - |t - c|/h) dt
double tent_antiderivative(const Tent& e, double x) {
  const double c = e.center;
  const double h = e.halfwidth;
  if (x <= c - h) return 0.0;
  if (x <= c) return (x - (c - h)) * (x - (c - h)) / (2.0 * h);
  if (x < c + h) return h - (c + h - x) * (c + h - x) / (2.0 * h);
  return h;
}

}  // namespace

TrigPolynomial::TrigPolynomial(FrequencyBasis basis,
                               std::map<FrequencyIndex, Complex> coefficients)
    : basis_(std::move(basis)) {
  for (auto& [k, c] : coefficients) {
    require(k.size() == basis_.dimension(), "frequency index has the wrong dimension");
    if (c != Complex{}) coeffs_.emplace(k, c);
  }
}

TrigPolynomial TrigPolynomial::constant(const FrequencyBasis& basis, Complex c) {
  return TrigPolynomial(basis, {{FrequencyIndex(basis.dimension(), 0), c}});
}

TrigPolynomial TrigPolynomial::exponential(const FrequencyBasis& basis, FrequencyIndex k,
                                           Complex c) {
  return TrigPolynomial(basis, {{std::move(k), c}});
}

Complex TrigPolynomial::coefficient(const FrequencyIndex& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex{} : it->second;
}

Complex TrigPolynomial::coefficient_at(double mu) const {
  Complex sum;
  const double tol = 1e-12 * std::max(1.0, std::abs(mu));
  for (const auto& [k, c] : coeffs_)
    if (std::abs(basis_.frequency(k) - mu) <= tol) sum += c;
  return sum;
}

Complex TrigPolynomial::operator()(double t) const {
  Complex sum;
  for (const auto& [k, c] : coeffs_) sum += c * unit_phase(basis_.frequency(k) * t);
  return sum;
}

Complex TrigPolynomial::on_torus(std::span<const double> theta) const {
  require(theta.size() == basis_.dimension(), "torus point has the wrong dimension");
  Complex sum;
  for (const auto& [k, c] : coeffs_) {
    double angle = 0.0;
    for (std::size_t j = 0; j < k.size(); ++j) angle += k[j] * theta[j];
    sum += c * unit_phase(angle);
  }
  return sum;
}

double TrigPolynomial::coefficient_l1() const {
  double s = 0.0;
  for (const auto& [k, c] : coeffs_) s += std::abs(c);
  return s;
}

double TrigPolynomial::torus_lipschitz() const {
  double s = 0.0;
  for (const auto& [k, c] : coeffs_) s += std::abs(c) * l1(k);
  return s;
}

double TrigPolynomial::max_frequency() const {
  double w = 0.0;
  for (const auto& [k, c] : coeffs_) w = std::max(w, std::abs(basis_.frequency(k)));
  return w;
}

bool TrigPolynomial::is_real_valued(double tol) const {
  for (const auto& [k, c] : coeffs_) {
    FrequencyIndex neg(k.size());
    std::transform(k.begin(), k.end(), neg.begin(), [](int v) { return -v; });
    if (std::abs(coefficient(neg) - std::conj(c)) > tol) return false;
  }
  return true;
}

TrigPolynomial TrigPolynomial::operator+(const TrigPolynomial& other) const {
  require(basis_ == other.basis_, "trigonometric polynomials over different bases");
  auto sum = coeffs_;
  for (const auto& [k, c] : other.coeffs_) sum[k] += c;
  return TrigPolynomial(basis_, std::move(sum));
}

TrigPolynomial TrigPolynomial::operator*(Complex s) const {
  auto scaled = coeffs_;
  for (auto& [k, c] : scaled) c *= s;
  return TrigPolynomial(basis_, std::move(scaled));
}

TrigPolynomial ap_product(const TrigPolynomial& f, const TrigPolynomial& g) {
  require(f.basis() == g.basis(), "trigonometric polynomials over different bases");
  std::map<FrequencyIndex, Complex> out;
  for (const auto& [a, ca] : f.coefficients()) {
    for (const auto& [b, cb] : g.coefficients()) {
      FrequencyIndex k(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) k[j] = a[j] + b[j];
      out[k] += ca * cb;
    }
  }
  return TrigPolynomial(f.basis(), std::move(out));
}

BumpFunction::BumpFunction(std::vector<Tent> tents) : tents_(std::move(tents)) {
  for (const auto& e : tents_) {
    require(std::isfinite(e.center), "tent center must be finite");
    require(std::isfinite(e.halfwidth) && e.halfwidth > 0.0, "tent halfwidth must be positive");
  }
}

Complex BumpFunction::operator()(double t) const {
  Complex sum;
  for (const auto& e : tents_) {
    const double shape = 1.0 - std::abs(t - e.center) / e.halfwidth;
    if (shape > 0.0) sum += e.amplitude * shape;
  }
  return sum;
}

double BumpFunction::sup_norm() const {
  double best = 0.0;
  for (const auto& e : tents_)
    for (double x : {e.center - e.halfwidth, e.center, e.center + e.halfwidth})
      best = std::max(best, std::abs((*this)(x)));
  return best;
}

double BumpFunction::mass() const {
  double m = 0.0;
  for (const auto& e : tents_) m += std::abs(e.amplitude) * e.halfwidth;
  return m;
}

Complex BumpFunction::integral() const {
  Complex sum;
  for (const auto& e : tents_) sum += e.amplitude * e.halfwidth;
  return sum;
}

Complex BumpFunction::integral(double a, double b) const {
  require(a <= b, "integration bounds out of order");
  Complex sum;
  for (const auto& e : tents_)
    sum += e.amplitude * (tent_antiderivative(e, b) - tent_antiderivative(e, a));
  return sum;
}

Complex evaluate(const AAPFunction& f, double t) { return f(t); }

}  // namespace twisted::aap
