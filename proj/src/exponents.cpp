#include "seqspace/exponents.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "seqspace/errors.hpp"

namespace seqspace {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
bool is_one(double p) { return std::fabs(p - 1.0) <= 1e-12; }
}  // namespace

CountFunction CountFunction::exp_decay() {
  CountFunction c;
  c.form_ = Form::exp_decay;
  return c;
}

CountFunction CountFunction::one_over_log() {
  CountFunction c;
  c.form_ = Form::one_over_log;
  return c;
}

CountFunction CountFunction::from_scales(std::vector<double> scales) {
  CountFunction c;
  c.form_ = Form::explicit_scales;
  c.scales_ = std::move(scales);
  return c;
}

double CountFunction::log_count(int k) const {
  if (k < 0) throw std::invalid_argument("count function index must be >= 0");
  switch (form_) {
    case Form::exp_decay:
      // |{n >= 1 : e^{-n} >= e^{-2^k}}| = 2^k
      return static_cast<double>(k) * std::log(2.0);
    case Form::one_over_log: {
      // |{n : 1/log(n+1) >= e^{-2^k}}| = exp(e^{2^k}) - 1
      const double e2k = std::exp2(static_cast<double>(k));
      const double big = std::exp(e2k);  // +inf once 2^k > log(DBL_MAX)
      if (!std::isfinite(big)) return kInf;
      return big + std::log1p(-std::exp(-big));
    }
    case Form::explicit_scales: {
      const double threshold = std::exp(-std::exp2(static_cast<double>(k)));
      std::size_t count = 0;
      for (double s : scales_)
        if (s >= threshold) ++count;
      if (count == 0) return -kInf;
      return std::log(static_cast<double>(count));
    }
  }
  return -kInf;
}

ExponentSequence::ExponentSequence(std::vector<double> prefix, ExponentTail tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  for (double p : prefix_)
    if (!(p >= 1.0 - 1e-12)) throw std::invalid_argument("exponents must be >= 1");

  if (const auto* c = std::get_if<ConstantTail>(&tail_)) {
    if (!(c->p >= 1.0)) throw std::invalid_argument("exponents must be >= 1");
  } else if (const auto* c = std::get_if<ConvergentTail>(&tail_)) {
    if (!(c->p >= 1.0)) throw std::invalid_argument("exponents must be >= 1");
  } else if (const auto* o = std::get_if<OscillatingTail>(&tail_)) {
    if (!(o->p1 >= 1.0 && o->p2 >= 1.0)) throw std::invalid_argument("exponents must be >= 1");
    if (o->period < 2) throw std::invalid_argument("oscillation period must be >= 2");
  } else if (const auto* d = std::get_if<DivergentTail>(&tail_)) {
    if (!(d->scale > 0.0)) throw std::invalid_argument("divergent tails need a positive scale");
  }

  if (tail_has_values()) {
    // The prefix is a cache of the closed form, not an override.
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
      const double expected = tail_value(i + 1);
      if (std::fabs(prefix_[i] - expected) > 1e-12 * std::max(1.0, std::fabs(expected)))
        throw std::invalid_argument("prefix disagrees with the tail closed form");
    }
    if (!(tail_value(1) >= 1.0 - 1e-12))
      throw std::invalid_argument("tail closed form dips below 1");
  }
}

bool ExponentSequence::tail_has_values() const {
  return !std::holds_alternative<CountsTail>(tail_) &&
         !std::holds_alternative<UnspecifiedTail>(tail_);
}

double ExponentSequence::tail_value(std::size_t n) const {
  const double dn = static_cast<double>(n);
  if (const auto* c = std::get_if<ConstantTail>(&tail_)) return c->p;
  if (const auto* c = std::get_if<ConvergentTail>(&tail_)) {
    switch (c->rate) {
      case RateKind::one_over_log:
        return c->p + c->c / std::log(dn + 1.0);
      case RateKind::one_over_sqrt_log:
        return c->p + c->c / std::sqrt(std::log(dn + 2.0));
    }
  }
  if (const auto* d = std::get_if<DivergentTail>(&tail_)) {
    const double arg = dn + d->shift;
    double grown = 0.0;
    switch (d->kind) {
      case GrowthKind::log2: grown = std::log2(arg); break;
      case GrowthKind::log_e: grown = std::log(arg); break;
      case GrowthKind::log_log: grown = std::log(std::log(arg)); break;
      case GrowthKind::sqrt_n: grown = std::sqrt(arg); break;
      case GrowthKind::linear: grown = arg; break;
    }
    double v = d->offset + d->scale * grown;
    if (d->floor) v = std::max(*d->floor, v);
    return v;
  }
  if (const auto* o = std::get_if<OscillatingTail>(&tail_)) {
    const std::size_t slot = (n - 1) % o->period;
    return slot < (o->period + 1) / 2 ? o->p1 : o->p2;
  }
  if (const auto* c = std::get_if<ConjugateTail>(&tail_)) {
    const double p = c->base->value(n);
    if (is_one(p)) {
      const std::size_t rank = c->base->ones_up_to(n);
      return std::max(2.0, 2.0 * std::log2(static_cast<double>(rank) + 1.0));
    }
    return p / (p - 1.0);
  }
  throw DescriptorError("exponent tail carries no per-index values");
}

double ExponentSequence::value(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("indices are 1-based");
  if (n <= prefix_.size()) return prefix_[n - 1];
  if (!tail_has_values())
    throw DescriptorError("index beyond the exponent prefix and the tail has no closed form");
  return tail_value(n);
}

bool ExponentSequence::is_constant() const {
  const auto* c = std::get_if<ConstantTail>(&tail_);
  if (c == nullptr) return false;
  for (double p : prefix_)
    if (p != c->p) return false;
  return true;
}

std::size_t ExponentSequence::ones_up_to(std::size_t n) const {
  std::size_t count = 0;
  for (std::size_t m = 1; m <= n; ++m)
    if (is_one(value(m))) ++count;
  return count;
}

ExponentSequence conjugate_exponents(const ExponentSequence& e) {
  std::vector<double> prefix;
  prefix.reserve(e.prefix_size());
  std::size_t ones = 0;
  for (std::size_t i = 0; i < e.prefix_size(); ++i) {
    const double p = e.prefix()[i];
    if (is_one(p)) {
      ++ones;
      prefix.push_back(std::max(2.0, 2.0 * std::log2(static_cast<double>(ones) + 1.0)));
    } else {
      prefix.push_back(p / (p - 1.0));
    }
  }

  if (const auto* c = std::get_if<ConstantTail>(&e.tail())) {
    if (is_one(c->p)) {
      // Ranks in the tail run k = ones + (n - prefix_len), so
      // q_n = max(2, 2 log2(n + shift)) with shift = ones - prefix_len + 1.
      DivergentTail tail{GrowthKind::log2, 2.0,
                         static_cast<double>(ones) - static_cast<double>(e.prefix_size()) + 1.0,
                         0.0, 2.0};
      return ExponentSequence(std::move(prefix), tail);
    }
    return ExponentSequence(std::move(prefix), ConstantTail{c->p / (c->p - 1.0)});
  }
  if (std::holds_alternative<UnspecifiedTail>(e.tail()))
    return ExponentSequence(std::move(prefix), UnspecifiedTail{});
  if (std::holds_alternative<CountsTail>(e.tail()))
    return ExponentSequence(std::move(prefix), std::get<CountsTail>(e.tail()));

  ConjugateTail tail{std::make_shared<ExponentSequence>(e)};
  return ExponentSequence(std::move(prefix), std::move(tail));
}

}  // namespace seqspace
