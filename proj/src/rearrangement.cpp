#include "seqspace/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "seqspace/errors.hpp"

namespace seqspace {

namespace {

void require_nonincreasing(const Weight& w, std::size_t up_to, const char* who) {
  double prev = 0.0;
  for (std::size_t n = 1; n <= up_to; ++n) {
    const double v = w.value(n);
    if (n > 1 && v > prev * (1.0 + 1e-12))
      throw ShapeError(std::string(who) + " needs a nonincreasing weight");
    prev = v;
  }
}

void require_profile(const std::vector<double>& y) {
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] < 0.0) throw ShapeError("block profile must be nonnegative");
    if (j > 0 && y[j] > y[j - 1] + 1e-15)
      throw ShapeError("block profile must be nonincreasing");
  }
}

}  // namespace

std::vector<double> decreasing_rearrangement(const FiniteVector& x) {
  std::vector<double> mags;
  mags.reserve(x.support_size());
  for (const auto& e : x.entries()) mags.push_back(std::fabs(e.value));
  std::sort(mags.begin(), mags.end(), std::greater<double>());
  return mags;
}

double marcinkiewicz_norm(const Weight& w, const FiniteVector& x) {
  const auto star = decreasing_rearrangement(x);
  require_nonincreasing(w, star.size(), "Marcinkiewicz norm");
  double partial = 0.0, s = 0.0, sup = 0.0;
  for (std::size_t n = 0; n < star.size(); ++n) {
    partial += star[n];
    s += w.value(n + 1);
    sup = std::max(sup, partial / s);
  }
  return sup;
}

double lorentz_d1_norm(const Weight& w, const FiniteVector& x) {
  const auto star = decreasing_rearrangement(x);
  require_nonincreasing(w, star.size(), "Lorentz d_{w,1} norm");
  double sum = 0.0;
  for (std::size_t n = 0; n < star.size(); ++n) sum += star[n] * w.value(n + 1);
  return sum;
}

double weak_lorentz_norm(const Weight& v, const FiniteVector& x) {
  const auto star = decreasing_rearrangement(x);
  double s = 0.0, sup = 0.0;
  for (std::size_t n = 0; n < star.size(); ++n) {
    s += v.value(n + 1);
    sup = std::max(sup, s * star[n]);
  }
  return sup;
}

double block_fundamental(const Weight& w, const std::vector<double>& y, std::size_t n_blocks) {
  if (n_blocks == 0) throw std::invalid_argument("block length must be positive");
  require_profile(y);
  double total = 0.0;
  for (std::size_t j = 1; j <= y.size(); ++j) {
    if (y[j - 1] == 0.0) continue;
    double block = 0.0;
    for (std::size_t n = (j - 1) * n_blocks + 1; n <= j * n_blocks; ++n) block += w.value(n);
    total += y[j - 1] * block;
  }
  return total;
}

double v_weight(const Weight& w, const std::vector<double>& y, std::size_t n) {
  if (n == 0) throw std::invalid_argument("index must be positive");
  require_profile(y);
  double total = 0.0;
  for (std::size_t j = 1; j <= y.size(); ++j) {
    const double step = y[j - 1] - (j < y.size() ? y[j] : 0.0);
    if (step == 0.0) continue;
    double block = 0.0;
    for (std::size_t i = 1 + j * (n - 1); i <= j * n; ++i) block += w.value(i);
    total += step * block;
  }
  return total;
}

}  // namespace seqspace
