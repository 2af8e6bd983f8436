#include "seqspace/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "seqspace/errors.hpp"

namespace seqspace {

namespace {

constexpr double kBranchPoint = 0.36787944117144233;  // 1/e
constexpr double kDualCut = 0.22313016014842982;      // e^{-3/2}

double dual_g_raw(double t) {
  // t^2 (-log t) up to e^{-3/2}, tangent line beyond.
  if (t <= kDualCut) return t * t * (-std::log(t));
  const double slope = 2.0 * kDualCut;                     // g'(e^{-3/2})
  const double value_at_cut = kDualCut * kDualCut * 1.5;   // g(e^{-3/2})
  return value_at_cut + slope * (t - kDualCut);
}

}  // namespace

OrliczFunction OrliczFunction::power(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("power exponent must be >= 1");
  OrliczFunction f;
  f.family_ = Family::power;
  f.p_ = p;
  return f;
}

OrliczFunction OrliczFunction::fpa(double p, double a) {
  if (!(p >= 1.0)) throw std::invalid_argument("fpa requires p >= 1");
  if (!(a > 0.0)) throw std::invalid_argument("fpa requires a > 0");
  OrliczFunction f;
  f.family_ = Family::fpa;
  f.p_ = p;
  f.a_ = a;
  return f;
}

OrliczFunction OrliczFunction::dual_g() {
  OrliczFunction f;
  f.family_ = Family::dual_g;
  return f;
}

OrliczFunction OrliczFunction::table(std::vector<std::array<double, 2>> points) {
  std::sort(points.begin(), points.end());
  if (points.size() < 2) throw std::invalid_argument("table needs at least two points");
  if (points.front()[0] != 0.0 || points.front()[1] != 0.0)
    throw std::invalid_argument("table must start at (0, 0)");

  OrliczFunction f;
  f.family_ = Family::table;
  f.points_ = points;
  f.ts_.reserve(points.size());
  f.ys_.reserve(points.size());
  double prev_slope = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) {
      const double dt = points[i][0] - points[i - 1][0];
      const double dy = points[i][1] - points[i - 1][1];
      if (dt <= 0.0) throw std::invalid_argument("table abscissae must be strictly increasing");
      if (dy < 0.0) throw std::invalid_argument("table values must be nondecreasing");
      const double slope = dy / dt;
      if (slope < prev_slope * (1.0 - 1e-12) - 1e-15)
        throw std::invalid_argument("table is not convex");
      prev_slope = slope;
    }
    f.ts_.push_back(points[i][0]);
    f.ys_.push_back(points[i][1]);
  }
  f.last_slope_ = prev_slope;

  // Rescale so F(1) = 1.
  OrliczFunction probe = f;
  const double at_one = probe(1.0);
  if (!(at_one > 0.0)) throw std::invalid_argument("table evaluates to 0 at t = 1");
  for (auto& y : f.ys_) y /= at_one;
  f.last_slope_ /= at_one;
  return f;
}

double OrliczFunction::operator()(double t) const {
  if (t < 0.0) throw std::domain_error("Orlicz functions are defined on [0, inf)");
  switch (family_) {
    case Family::power:
      return std::pow(t, p_);
    case Family::fpa:
      if (t == 0.0) return 0.0;
      if (t < kBranchPoint)
        return std::exp(-a_) * std::pow(t, p_) * std::pow(-std::log(t), -a_);
      return std::pow(t, p_ + a_);
    case Family::dual_g: {
      if (t == 0.0) return 0.0;
      static const double norm = dual_g_raw(1.0);
      return dual_g_raw(t) / norm;
    }
    case Family::flow:
      return (*base_)(s_ * t) / base_at_s_;
    case Family::table: {
      if (t >= ts_.back()) return ys_.back() + last_slope_ * (t - ts_.back());
      const auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
      const std::size_t i = static_cast<std::size_t>(it - ts_.begin());
      // ts_[i-1] <= t < ts_[i]
      const double w = (t - ts_[i - 1]) / (ts_[i] - ts_[i - 1]);
      return ys_[i - 1] + w * (ys_[i] - ys_[i - 1]);
    }
  }
  return 0.0;
}

OrliczFunction flow(const OrliczFunction& f, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("flow scale must be positive");
  const double at_s = f(s);
  if (!(at_s > 0.0)) throw std::invalid_argument("degenerate flow: F(s) = 0");
  OrliczFunction g;
  g.family_ = OrliczFunction::Family::flow;
  g.s_ = s;
  g.base_at_s_ = at_s;
  g.base_ = std::make_shared<OrliczFunction>(f);
  return g;
}

double delta2_estimate(const OrliczFunction& f, double a, std::size_t grid_size) {
  if (!(a > 0.0 && a <= 0.5)) throw std::invalid_argument("delta2 domain bound must be in (0, 1/2]");
  if (grid_size < 10) throw std::invalid_argument("delta2 grid must have at least 10 points");
  const double ratio = std::pow(2e-8, 1.0 / static_cast<double>(grid_size - 1));
  double sup = 0.0;
  double t = 0.5;
  for (std::size_t i = 0; i < grid_size; ++i, t *= ratio) {
    if (t > a) continue;
    const double denom = f(t);
    const double numer = f(2.0 * t);
    if (denom == 0.0) {
      if (numer > 0.0) return std::numeric_limits<double>::infinity();
      continue;
    }
    sup = std::max(sup, numer / denom);
  }
  return sup;
}

double multiplicative_convexity_violation(const OrliczFunction& f, std::size_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid too small");
  const double lo = std::log(1e-6);
  const double hi = std::log(1.0 - 1e-6);
  std::vector<double> pts(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i)
    pts[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1));

  double worst = -std::numeric_limits<double>::infinity();
  for (double s : pts) {
    const double fs = f(s);
    for (double t : pts) {
      const double ft = f(t);
      for (int k = 1; k < 16; ++k) {
        const double theta = static_cast<double>(k) / 16.0;
        const double mix = std::pow(s, theta) * std::pow(t, 1.0 - theta);
        const double lhs = f(mix);
        const double rhs = std::pow(fs, theta) * std::pow(ft, 1.0 - theta);
        worst = std::max(worst, lhs - rhs);
      }
    }
  }
  return worst;
}

double fundamental_function(const OrliczFunction& f, double n) {
  if (!(n >= 1.0)) throw std::invalid_argument("fundamental function needs N >= 1");
  if (n == 1.0) return 1.0;
  const double target = 1.0 / n;
  double lo = 1.0, hi = n;  // F(1/lo) >= 1/N >= F(1/hi)
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (f(1.0 / mid) >= target)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-12 * hi) return 0.5 * (lo + hi);
  }
  throw ConvergenceError("fundamental function bisection did not converge");
}

}  // namespace seqspace
