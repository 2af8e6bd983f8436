#include "seqspace/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "seqspace/errors.hpp"

namespace seqspace {

namespace {

double closed_form_value(Weight::Form form, double p, std::size_t n) {
  const double dn = static_cast<double>(n);
  switch (form) {
    case Weight::Form::constant:
      return 1.0;
    case Weight::Form::one_over_n:
      return 1.0 / dn;
    case Weight::Form::pow_diff:
      return std::pow(dn, 1.0 / p) - std::pow(dn - 1.0, 1.0 / p);
    case Weight::Form::custom:
      break;
  }
  throw DescriptorError("custom weight has no closed form");
}

}  // namespace

Weight Weight::constant() { return with_prefix({}, Form::constant); }
Weight Weight::one_over_n() { return with_prefix({}, Form::one_over_n); }

Weight Weight::pow_diff(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("pow_diff weight needs p > 0");
  return with_prefix({}, Form::pow_diff, p);
}

Weight Weight::from_values(std::vector<double> values) {
  return with_prefix(std::move(values), Form::custom);
}

Weight Weight::with_prefix(std::vector<double> prefix, Form form, double p) {
  Weight w;
  w.prefix_ = std::move(prefix);
  w.form_ = form;
  w.p_ = p;
  double running = 0.0;
  for (std::size_t i = 0; i < w.prefix_.size(); ++i) {
    const double v = w.prefix_[i];
    if (!(v > 0.0)) throw std::invalid_argument("weights must be positive");
    if (form != Form::custom) {
      const double expected = closed_form_value(form, p, i + 1);
      if (std::fabs(v - expected) > 1e-12 * std::max(1.0, expected))
        throw std::invalid_argument("weight prefix disagrees with the closed form");
    }
    running += v;
    w.prefix_sums_.push_back(running);
  }
  return w;
}

double Weight::value(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("indices are 1-based");
  if (n <= prefix_.size()) return prefix_[n - 1];
  if (form_ == Form::custom)
    throw DescriptorError("index beyond the weight prefix and no closed form");
  return closed_form_value(form_, p_, n);
}

double Weight::primitive(std::size_t n) const {
  if (n == 0) return 0.0;
  switch (form_) {
    case Form::constant:
      return static_cast<double>(n);
    case Form::pow_diff:
      return std::pow(static_cast<double>(n), 1.0 / p_);  // telescoping
    default:
      break;
  }
  if (n <= prefix_sums_.size()) return prefix_sums_[n - 1];
  double s = prefix_sums_.empty() ? 0.0 : prefix_sums_.back();
  for (std::size_t i = prefix_.size() + 1; i <= n; ++i) s += value(i);
  return s;
}

std::size_t Weight::available() const {
  return form_ == Form::custom ? prefix_.size() : std::numeric_limits<std::size_t>::max();
}

WeightProperties weight_properties(const Weight& w, std::size_t m) {
  if (m < 4) throw std::invalid_argument("property scan needs M >= 4");
  if (2 * m > w.available()) throw DescriptorError("weight does not reach 2M");

  std::vector<double> s(2 * m + 1, 0.0);
  std::vector<double> values(2 * m + 1, 0.0);
  for (std::size_t n = 1; n <= 2 * m; ++n) {
    values[n] = w.value(n);
    s[n] = s[n - 1] + values[n];
  }

  WeightProperties props{0.0, 0.0, 0.0, true};
  for (std::size_t n = 1; n <= m; ++n) {
    props.doubling = std::max(props.doubling, s[2 * n] / s[n]);
    props.regularity =
        std::max(props.regularity, s[n] / (static_cast<double>(n) * values[n]));
    if (n >= 2 && values[n] > values[n - 1] + 1e-12 * values[n - 1])
      props.nonincreasing = false;
  }
  for (std::size_t n = 1; n <= m; ++n)
    for (std::size_t k = 1; n * k <= m; ++k)
      props.submultiplicativity = std::max(props.submultiplicativity, s[n * k] / (s[n] * s[k]));
  return props;
}

Weight reciprocal_difference_weight(const Weight& w, std::size_t length) {
  if (length == 0) throw std::invalid_argument("length must be positive");
  std::vector<double> v(length);
  double prev_reciprocal = 0.0;  // 1/w_0 := 0
  for (std::size_t n = 1; n <= length; ++n) {
    const double r = 1.0 / w.value(n);
    v[n - 1] = r - prev_reciprocal;
    if (!(v[n - 1] > 0.0))
      throw std::invalid_argument("reciprocal differences need a strictly decreasing weight");
    prev_reciprocal = r;
  }
  return Weight::from_values(std::move(v));
}

}  // namespace seqspace
