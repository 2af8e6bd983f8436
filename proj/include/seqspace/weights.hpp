#pragma once

#include <cstddef>
#include <vector>

namespace seqspace {

// A weight w_n > 0 with primitive s_n = sum_{i<=n} w_i. Closed forms:
//   constant      w_n = 1,                       s_n = n
//   one_over_n    w_n = 1/n                      (s_n accumulated)
//   pow_diff(p)   w_n = n^{1/p} - (n-1)^{1/p},   s_n = n^{1/p}
//   custom        prefix values only
class Weight {
public:
  enum class Form { custom, constant, one_over_n, pow_diff };

  static Weight constant();
  static Weight one_over_n();
  static Weight pow_diff(double p);
  static Weight from_values(std::vector<double> values);
  // Prefix cache in front of a closed form; the prefix must agree with it.
  static Weight with_prefix(std::vector<double> prefix, Form form, double p = 0.0);

  double value(std::size_t n) const;
  double primitive(std::size_t n) const;  // s_n
  bool has_closed_form() const { return form_ != Form::custom; }

  Form form() const { return form_; }
  double pow_diff_p() const { return p_; }
  const std::vector<double>& prefix() const { return prefix_; }
  std::size_t prefix_size() const { return prefix_.size(); }

  // Largest n for which value(n) is defined (SIZE_MAX for closed forms).
  std::size_t available() const;

private:
  Weight() = default;
  std::vector<double> prefix_;
  std::vector<double> prefix_sums_;
  Form form_ = Form::custom;
  double p_ = 2.0;
};

// Range-bounded property constants of a weight:
//   doubling            sup_{n<=M} s_{2n}/s_n
//   regularity          sup_{n<=M} s_n/(n w_n)
//   submultiplicativity sup_{nk<=M} s_{nk}/(s_n s_k)
// computed by a direct scan; the scan never claims an infinite sup.
struct WeightProperties {
  double doubling;
  double regularity;
  double submultiplicativity;
  bool nonincreasing;
};
WeightProperties weight_properties(const Weight& w, std::size_t m);

// v_n = 1/w_n - 1/w_{n-1} with 1/w_0 := 0, so that sum_{i<=n} v_i = 1/w_n.
// Requires w strictly decreasing on [1, length].
Weight reciprocal_difference_weight(const Weight& w, std::size_t length);

}  // namespace seqspace
