#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

namespace seqspace {

// A normalized convex Orlicz function: convex F on [0, inf) with F(0) = 0
// and F(1) = 1.
//
// Families:
//   power(p)    F(t) = t^p, p >= 1.
//   fpa(p, a)   F(t) = e^{-a} t^p (-log t)^{-a} on (0, 1/e), t^{p+a} beyond.
//               The left-branch constant e^{-a} glues the two branches C^1 at
//               t = 1/e (both equal e^{-(p+a)}); for p = 1 it coincides with
//               the constant e^{-pa}.
//   dual_g()    F(t) = t^2 (-log t) on (0, e^{-3/2}], extended by its tangent
//               line at e^{-3/2} and rescaled so F(1) = 1. The tangent
//               extension keeps the slope nondecreasing, so convexity
//               survives; the rescaling changes the induced norm by a
//               constant factor only.
//   flow(F, s)  F_s(t) = F(s t) / F(s).
//   table(pts)  monotone convex piecewise-linear interpolation of the given
//               points, linearly extended past the last abscissa with the
//               final slope, then rescaled so F(1) = 1. Non-convex input is
//               rejected at construction.
class OrliczFunction {
public:
  enum class Family { power, fpa, dual_g, flow, table };

  static OrliczFunction power(double p);
  static OrliczFunction fpa(double p, double a);
  static OrliczFunction dual_g();
  static OrliczFunction table(std::vector<std::array<double, 2>> points);

  // F(t). Throws std::domain_error for t < 0.
  double operator()(double t) const;

  Family family() const { return family_; }
  double param_p() const { return p_; }
  double param_a() const { return a_; }
  double flow_scale() const { return s_; }
  const OrliczFunction& flow_base() const { return *base_; }
  const std::vector<std::array<double, 2>>& table_points() const { return points_; }

  friend OrliczFunction flow(const OrliczFunction& f, double s);

private:
  OrliczFunction() = default;

  Family family_ = Family::power;
  double p_ = 1.0;
  double a_ = 0.0;
  // flow
  double s_ = 1.0;
  double base_at_s_ = 1.0;
  std::shared_ptr<const OrliczFunction> base_;
  // table: raw input points, plus the normalized breakpoints used to evaluate
  std::vector<std::array<double, 2>> points_;
  std::vector<double> ts_, ys_;
  double last_slope_ = 0.0;
};

// The flow of F at scale s: t -> F(st)/F(s). Throws std::invalid_argument
// when F(s) = 0 (degenerate flow).
OrliczFunction flow(const OrliczFunction& f, double s);

// Lower estimate of the Delta_2-at-origin constant: sup of F(2t)/F(t) over a
// log-spaced grid in (0, a], 0 < a <= 1/2. The grid is anchored at the fixed
// point 1/2 and steps down to 1e-8, so the grids for two domains (0, a1] and
// (0, a2] with a1 <= a2 share their points and the estimate is monotone in a.
double delta2_estimate(const OrliczFunction& f, double a, std::size_t grid_size = 512);

// Max over a grid of s, t, theta in (0,1) of
//   F(s^theta t^(1-theta)) - F(s)^theta F(t)^(1-theta).
// A value <= 1e-10 signals that F is multiplicatively convex on the grid.
double multiplicative_convexity_violation(const OrliczFunction& f,
                                          std::size_t grid_size = 512);

// Solves F(1/D) = 1/N for D by bisection on [1, N]; F(1) = 1 and the
// convexity bound F(1/N) <= 1/N bracket the root. Relative tolerance 1e-12.
double fundamental_function(const OrliczFunction& f, double n);

}  // namespace seqspace
