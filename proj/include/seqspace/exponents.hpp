#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace seqspace {

// log-cardinality of {n : s_n >= exp(-2^k)} as a function of k, for scale
// sequences decaying to zero. Closed forms are evaluated in log space so the
// counts may exceed any representable integer.
class CountFunction {
public:
  enum class Form {
    exp_decay,       // s_n = e^{-n}           -> count = 2^k
    one_over_log,    // s_n = 1/log(n+1)       -> count = exp(e^{2^k}) - 1
    explicit_scales  // enumerate a given finite scale list
  };

  static CountFunction exp_decay();
  static CountFunction one_over_log();
  static CountFunction from_scales(std::vector<double> scales);

  // log |{n : s_n >= exp(-2^k)}|; -inf for an empty set, +inf on overflow.
  double log_count(int k) const;

  Form form() const { return form_; }
  const std::vector<double>& scales() const { return scales_; }
  bool closed_form() const { return form_ != Form::explicit_scales; }

private:
  Form form_ = Form::exp_decay;
  std::vector<double> scales_;
};

enum class RateKind {
  one_over_log,      // c / log(n+1)
  one_over_sqrt_log  // c / sqrt(log(n+2))
};

enum class GrowthKind { log2, log_e, log_log, sqrt_n, linear };

struct ConstantTail {
  double p;
};

// p_n = p + c * rate(n); monotone in n, converging to p.
struct ConvergentTail {
  double p;
  RateKind rate;
  double c;
};

// p_n = max(floor, offset + scale * f(n + shift)) with f given by `kind`.
struct DivergentTail {
  GrowthKind kind;
  double scale = 1.0;
  double shift = 0.0;
  double offset = 0.0;
  std::optional<double> floor;
};

// Period-P pattern: the first ceil(P/2) slots take p1, the rest p2.
struct OscillatingTail {
  double p1;
  double p2;
  std::size_t period = 2;
};

struct CountsTail {
  CountFunction counts;
};

struct UnspecifiedTail {};

class ExponentSequence;

// Exact conjugates of another sequence, evaluated on demand.
struct ConjugateTail {
  std::shared_ptr<const ExponentSequence> base;
};

using ExponentTail = std::variant<ConstantTail, ConvergentTail, DivergentTail,
                                  OscillatingTail, CountsTail, UnspecifiedTail,
                                  ConjugateTail>;

// Nakano exponents p_n >= 1 as a finite prefix plus an analytic tail
// descriptor. Norm computation reads concrete values; the identification
// criteria consume the descriptor symbolically, since the statements they
// decide quantify over all n.
class ExponentSequence {
public:
  ExponentSequence(std::vector<double> prefix, ExponentTail tail);
  explicit ExponentSequence(std::vector<double> prefix)
      : ExponentSequence(std::move(prefix), UnspecifiedTail{}) {}

  static ExponentSequence constant(double p) { return ExponentSequence({}, ConstantTail{p}); }

  // p_n (n is 1-based). Throws DescriptorError when the index lies beyond the
  // prefix and the tail has no closed form.
  double value(std::size_t n) const;

  bool tail_has_values() const;
  const ExponentTail& tail() const { return tail_; }
  const std::vector<double>& prefix() const { return prefix_; }
  std::size_t prefix_size() const { return prefix_.size(); }

  // True when the sequence is the constant p for all n.
  bool is_constant() const;

  // #{m <= n : p_m = 1} (rank support for conjugation).
  std::size_t ones_up_to(std::size_t n) const;

private:
  double tail_value(std::size_t n) const;

  std::vector<double> prefix_;
  ExponentTail tail_;
};

// Hoelder conjugates: q_n = p_n / (p_n - 1) where p_n > 1. Where p_n = 1 the
// dual pairing only needs some (q_n) with sum r^{q_n} finite over those n;
// this assigns q_n = max(2, 2 log2(k+1)) with k the rank of n among the
// indices carrying exponent 1, which makes sum (1/2)^{q_n} <= sum (k+1)^{-2}.
ExponentSequence conjugate_exponents(const ExponentSequence& e);

}  // namespace seqspace
