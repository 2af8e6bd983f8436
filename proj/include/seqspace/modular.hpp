#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "seqspace/exponents.hpp"
#include "seqspace/finite_vector.hpp"
#include "seqspace/orlicz.hpp"

namespace seqspace {

// Scales (s_n) for flow families: finite prefix plus an optional closed form.
class ScaleSequence {
public:
  enum class Form { none, exp_minus_n, constant };

  explicit ScaleSequence(std::vector<double> prefix, Form form = Form::none,
                         double constant_value = 1.0);
  static ScaleSequence exp_minus_n() { return ScaleSequence({}, Form::exp_minus_n); }
  static ScaleSequence constant(double s) { return ScaleSequence({}, Form::constant, s); }

  double value(std::size_t n) const;
  bool has_closed_form() const { return form_ != Form::none; }
  Form form() const { return form_; }
  double constant_value() const { return constant_; }
  const std::vector<double>& prefix() const { return prefix_; }
  bool is_constant() const;

private:
  std::vector<double> prefix_;
  Form form_ = Form::none;
  double constant_ = 1.0;
};

// A Musielak-Orlicz sequence space described by its coordinate functions:
// either a Nakano family F_n(t) = t^{p_n}, a flow family F_n = F_{s_n} of a
// fixed Orlicz function F, or the constant family F_n = F (Orlicz space).
class MusielakSpace {
public:
  static MusielakSpace nakano(ExponentSequence exponents);
  static MusielakSpace orlicz(OrliczFunction f);
  static MusielakSpace flow_family(OrliczFunction base, ScaleSequence scales);

  // F_n(t), t >= 0.
  double coordinate(std::size_t n, double t) const;

  bool is_nakano() const { return kind_ == Kind::nakano; }
  bool is_orlicz() const { return kind_ == Kind::orlicz; }
  const ExponentSequence& exponents() const;
  const OrliczFunction& function() const { return function_; }
  const ScaleSequence& scales() const { return scales_; }

private:
  enum class Kind { nakano, orlicz, flow };
  MusielakSpace() : scales_({}, ScaleSequence::Form::constant, 1.0) {}

  Kind kind_ = Kind::orlicz;
  std::optional<ExponentSequence> exponents_;
  OrliczFunction function_ = OrliczFunction::power(1.0);
  ScaleSequence scales_;
};

// m(x) = sum_n F_n(|x_n| * scale) over the support of x.
double modular(const MusielakSpace& space, const FiniteVector& x, double scale = 1.0);

// Luxemburg norm inf{t > 0 : m(x/t) <= 1} by bisection on
// [max |x_n|, sum |x_n|]; the coordinate attaining the max contributes
// F_k(1) = 1 at the lower end, and convexity with F(0) = 0 gives
// F(lambda) <= lambda at the upper end. Zero vector -> 0.
double luxemburg_norm(const MusielakSpace& space, const FiniteVector& x, double tol = 1e-12);

// Modular <-> norm boundedness bridge for Nakano spaces:
//   min(||x||, ||x||^s) <= m(x) <= max(||x||, ||x||^s),  s = max exponent on supp x.
struct BridgeReport {
  double modular_value;
  double norm;
  double sup_exponent;
  bool pass;
};
BridgeReport bridge_check(const MusielakSpace& space, const FiniteVector& x);

// |<x, y>| / (||x||_{(p_n)} ||y||_{(q_n)}) with (q_n) the conjugate exponents.
// Always <= 2: splitting the pairing with Young's inequality bounds it by
// m(x/||x||) + m(y/||y||) <= 2. Throws on a zero denominator.
double holder_ratio(const ExponentSequence& e, const FiniteVector& x, const FiniteVector& y);

}  // namespace seqspace
