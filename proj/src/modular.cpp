#include "seqspace/modular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "seqspace/errors.hpp"

namespace seqspace {

ScaleSequence::ScaleSequence(std::vector<double> prefix, Form form, double constant_value)
    : prefix_(std::move(prefix)), form_(form), constant_(constant_value) {
  for (double s : prefix_)
    if (!(s > 0.0)) throw std::invalid_argument("scales must be positive");
  if (form_ == Form::constant && !(constant_ > 0.0))
    throw std::invalid_argument("scales must be positive");
}

double ScaleSequence::value(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("indices are 1-based");
  if (n <= prefix_.size()) return prefix_[n - 1];
  switch (form_) {
    case Form::exp_minus_n:
      return std::exp(-static_cast<double>(n));
    case Form::constant:
      return constant_;
    case Form::none:
      throw DescriptorError("index beyond the scale prefix and no closed form");
  }
  return 0.0;
}

bool ScaleSequence::is_constant() const {
  if (form_ != Form::constant) return false;
  for (double s : prefix_)
    if (s != constant_) return false;
  return true;
}

MusielakSpace MusielakSpace::nakano(ExponentSequence exponents) {
  MusielakSpace s;
  s.kind_ = Kind::nakano;
  s.exponents_ = std::move(exponents);
  return s;
}

MusielakSpace MusielakSpace::orlicz(OrliczFunction f) {
  MusielakSpace s;
  s.kind_ = Kind::orlicz;
  s.function_ = std::move(f);
  return s;
}

MusielakSpace MusielakSpace::flow_family(OrliczFunction base, ScaleSequence scales) {
  MusielakSpace s;
  s.kind_ = Kind::flow;
  s.function_ = std::move(base);
  s.scales_ = std::move(scales);
  return s;
}

double MusielakSpace::coordinate(std::size_t n, double t) const {
  switch (kind_) {
    case Kind::nakano:
      return std::pow(t, exponents_->value(n));
    case Kind::orlicz:
      return function_(t);
    case Kind::flow: {
      const double s = scales_.value(n);
      const double denom = function_(s);
      if (!(denom > 0.0)) throw std::invalid_argument("degenerate flow: F(s_n) = 0");
      return function_(s * t) / denom;
    }
  }
  return 0.0;
}

const ExponentSequence& MusielakSpace::exponents() const {
  if (!exponents_) throw std::logic_error("not a Nakano space");
  return *exponents_;
}

double modular(const MusielakSpace& space, const FiniteVector& x, double scale) {
  double sum = 0.0;
  for (const auto& e : x.entries()) sum += space.coordinate(e.index, std::fabs(e.value) * scale);
  return sum;
}

double luxemburg_norm(const MusielakSpace& space, const FiniteVector& x, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (x.empty()) return 0.0;
  double lo = x.max_abs();
  double hi = x.sum_abs();
  if (lo == hi) return lo;  // single-entry support: F_k(1) = 1
  if (modular(space, x, 1.0 / lo) <= 1.0) return lo;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (modular(space, x, 1.0 / mid) <= 1.0)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= tol * hi) return 0.5 * (lo + hi);
  }
  throw ConvergenceError("Luxemburg norm bisection did not converge");
}

BridgeReport bridge_check(const MusielakSpace& space, const FiniteVector& x) {
  if (!space.is_nakano()) throw std::invalid_argument("bridge check is for Nakano spaces");
  BridgeReport report{};
  report.modular_value = modular(space, x);
  report.norm = luxemburg_norm(space, x);
  double sup_p = 1.0;
  for (const auto& e : x.entries())
    sup_p = std::max(sup_p, space.exponents().value(e.index));
  report.sup_exponent = sup_p;
  const double pow_s = std::pow(report.norm, sup_p);
  const double lower = std::min(report.norm, pow_s);
  const double upper = std::max(report.norm, pow_s);
  const double slack = 1e-10 * std::max(1.0, upper);
  report.pass = (lower <= report.modular_value + slack) &&
                (report.modular_value <= upper + slack);
  return report;
}

double holder_ratio(const ExponentSequence& e, const FiniteVector& x, const FiniteVector& y) {
  const ExponentSequence q = conjugate_exponents(e);
  const double nx = luxemburg_norm(MusielakSpace::nakano(e), x);
  const double ny = luxemburg_norm(MusielakSpace::nakano(q), y);
  if (!(nx > 0.0) || !(ny > 0.0))
    throw std::invalid_argument("Hoelder ratio is undefined for zero vectors");
  double pairing = 0.0;
  const auto& xe = x.entries();
  const auto& ye = y.entries();
  std::size_t i = 0, j = 0;
  while (i < xe.size() && j < ye.size()) {
    if (xe[i].index < ye[j].index)
      ++i;
    else if (ye[j].index < xe[i].index)
      ++j;
    else
      pairing += xe[i++].value * ye[j++].value;
  }
  return std::fabs(pairing) / (nx * ny);
}

}  // namespace seqspace
