#include "seqspace/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "seqspace/errors.hpp"
#include "seqspace/random.hpp"

namespace seqspace {

namespace {

constexpr std::size_t kSubsetBudget = 22;

// Positions (0-based into entries) ordered by magnitude desc, index asc.
std::vector<std::size_t> positions_by_magnitude(const FiniteVector& x) {
  std::vector<std::size_t> order(x.support_size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(x.entries()[a].value) > std::fabs(x.entries()[b].value);
  });
  return order;
}

template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit visit) {
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    visit(comb);
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

struct TailLimits {
  std::optional<double> phi_l_exponent;  // phi_l approaches N^{1/value}
  std::optional<double> phi_u_exponent;  // phi_u approaches N^{1/value}
};

// Cluster-point data for the analytic democracy columns: indicator sums over
// index sets drawn near a cluster point p of the exponents approach N^{1/p}
// (with N^{1/inf} read as 1).
TailLimits nakano_tail_limits(const ExponentSequence& e, bool nonincreasing,
                              bool nondecreasing) {
  TailLimits limits;
  const auto& tail = e.tail();
  if (const auto* c = std::get_if<ConstantTail>(&tail)) {
    limits.phi_l_exponent = c->p;
    limits.phi_u_exponent = c->p;
  } else if (const auto* c = std::get_if<ConvergentTail>(&tail)) {
    if (nonincreasing)
      limits.phi_u_exponent = c->p;
    else if (nondecreasing)
      limits.phi_l_exponent = c->p;
  } else if (std::holds_alternative<DivergentTail>(tail)) {
    if (nondecreasing) limits.phi_l_exponent = std::numeric_limits<double>::infinity();
  } else if (const auto* o = std::get_if<OscillatingTail>(&tail)) {
    limits.phi_u_exponent = std::min(o->p1, o->p2);
    limits.phi_l_exponent = std::max(o->p1, o->p2);
  }
  return limits;
}

double analytic_phi(double exponent, std::size_t n) {
  if (std::isinf(exponent)) return 1.0;
  return std::pow(static_cast<double>(n), 1.0 / exponent);
}

void attach_analytic(DemocracyRow& row, const TailLimits& limits) {
  if (limits.phi_l_exponent) row.phi_l_analytic = analytic_phi(*limits.phi_l_exponent, row.n);
  if (limits.phi_u_exponent) row.phi_u_analytic = analytic_phi(*limits.phi_u_exponent, row.n);
}

}  // namespace

GreedyReport greedy_step(const FiniteVector& x, std::size_t n_terms) {
  if (n_terms > x.support_size())
    throw std::invalid_argument("greedy step asks for more terms than the support holds");
  const auto order = positions_by_magnitude(x);
  std::vector<std::size_t> keep(order.begin(),
                                order.begin() + static_cast<std::ptrdiff_t>(n_terms));
  GreedyReport report;
  report.n_terms = n_terms;
  report.greedy_part = x.keep_positions(keep);
  report.residual = x.drop_positions(keep);
  report.selected.reserve(n_terms);
  for (const auto& e : report.greedy_part.entries()) report.selected.push_back(e.index);
  return report;
}

double best_nterm_error(const SpaceDescriptor& space, const FiniteVector& x,
                        std::size_t n_terms) {
  const std::size_t support = x.support_size();
  if (support > kSubsetBudget)
    throw BudgetError("support exceeds the subset-enumeration budget of 22; subsample first");
  if (n_terms >= support) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for_each_combination(support, n_terms, [&](const std::vector<std::size_t>& keep) {
    best = std::min(best, space_norm(space, x.drop_positions(keep)));
  });
  return best;
}

GreedyReport greedy_ratio_report(const SpaceDescriptor& space, const FiniteVector& x,
                                 std::size_t n_terms) {
  GreedyReport report = greedy_step(x, n_terms);
  report.residual_norm = space_norm(space, report.residual);
  report.sigma = best_nterm_error(space, x, n_terms);
  if (report.sigma == 0.0) {
    if (report.residual_norm > 0.0)
      throw std::logic_error("sigma_N = 0 with a nonzero residual cannot happen for lattice norms");
    report.ratio = 1.0;
  } else {
    report.ratio = report.residual_norm / report.sigma;
  }
  return report;
}

double greedy_ratio(const SpaceDescriptor& space, const FiniteVector& x, std::size_t n_terms) {
  return greedy_ratio_report(space, x, n_terms).ratio;
}

double DemocracyTable::max_ratio() const {
  double m = 0.0;
  for (const auto& row : rows) m = std::max(m, row.ratio);
  return m;
}

DemocracyTable democracy_functions(const SpaceDescriptor& space, std::size_t n_max,
                                   std::size_t window) {
  if (n_max == 0) throw std::invalid_argument("N_max must be positive");
  if (n_max > window) throw std::invalid_argument("N_max must not exceed the window");

  DemocracyTable table;
  table.rows.reserve(n_max);

  const auto indicator_norm = [&](const std::vector<std::size_t>& indices) {
    return space_norm(space, FiniteVector::indicator(indices));
  };
  const auto range_indices = [](std::size_t first, std::size_t last) {
    std::vector<std::size_t> v;
    v.reserve(last - first + 1);
    for (std::size_t i = first; i <= last; ++i) v.push_back(i);
    return v;
  };

  if (space.symmetric()) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double phi = space_norm(space, FiniteVector::indicator(n));
      table.rows.push_back({n, phi, phi, 1.0, "exact-symmetric", {}, {}});
    }
    return table;
  }

  TailLimits limits;
  if (space.kind() == SpaceDescriptor::Kind::nakano) {
    const auto& exps = space.exponents();
    bool nonincreasing = true, nondecreasing = true;
    double prev = exps.value(1);
    for (std::size_t n = 2; n <= window; ++n) {
      const double v = exps.value(n);
      if (v > prev) nonincreasing = false;
      if (v < prev) nondecreasing = false;
      prev = v;
    }
    limits = nakano_tail_limits(exps, nonincreasing, nondecreasing);

    if (nonincreasing || nondecreasing) {
      for (std::size_t n = 1; n <= n_max; ++n) {
        // Smaller exponents give larger indicator norms, so the head of a
        // nonincreasing window minimizes and its tail maximizes.
        const double head = indicator_norm(range_indices(1, n));
        const double tail = indicator_norm(range_indices(window - n + 1, window));
        DemocracyRow row;
        row.n = n;
        row.phi_l = nonincreasing ? head : tail;
        row.phi_u = nonincreasing ? tail : head;
        row.ratio = row.phi_u / row.phi_l;
        row.method = "monotone-window";
        attach_analytic(row, limits);
        table.rows.push_back(std::move(row));
      }
      return table;
    }
  }

  if (window <= 20) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      for_each_combination(window, n, [&](const std::vector<std::size_t>& comb) {
        std::vector<std::size_t> indices(comb.size());
        for (std::size_t i = 0; i < comb.size(); ++i) indices[i] = comb[i] + 1;
        const double v = indicator_norm(indices);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      });
      DemocracyRow row;
      row.n = n;
      row.phi_l = lo;
      row.phi_u = hi;
      row.ratio = hi / lo;
      row.method = "exhaustive";
      attach_analytic(row, limits);
      table.rows.push_back(std::move(row));
    }
    return table;
  }

  // Per-threshold heuristic: at a fixed threshold t the modular contribution
  // of index n to an indicator is F_n(1/t); the candidate extremal sets are
  // the top and bottom N contributors, collected over a grid of thresholds
  // and then measured exactly.
  const auto& ms = space.musielak();
  const std::size_t n_thresholds = 33;
  std::vector<double> thresholds(n_thresholds);
  const double lo_t = std::log(1.0001);
  const double hi_t = std::log(std::max<double>(2.0, static_cast<double>(window)));
  for (std::size_t i = 0; i < n_thresholds; ++i)
    thresholds[i] =
        std::exp(lo_t + (hi_t - lo_t) * static_cast<double>(i) / (n_thresholds - 1));

  for (std::size_t n = 1; n <= n_max; ++n) {
    std::set<std::vector<std::size_t>> top_sets, bottom_sets;
    for (double t : thresholds) {
      std::vector<std::pair<double, std::size_t>> contrib;
      contrib.reserve(window);
      for (std::size_t idx = 1; idx <= window; ++idx)
        contrib.emplace_back(ms.coordinate(idx, 1.0 / t), idx);
      std::stable_sort(contrib.begin(), contrib.end(),
                       [](const auto& a, const auto& b) { return a.first > b.first; });
      std::vector<std::size_t> top(n), bottom(n);
      for (std::size_t i = 0; i < n; ++i) {
        top[i] = contrib[i].second;
        bottom[i] = contrib[window - n + i].second;
      }
      std::sort(top.begin(), top.end());
      std::sort(bottom.begin(), bottom.end());
      top_sets.insert(std::move(top));
      bottom_sets.insert(std::move(bottom));
    }
    double hi = 0.0;
    for (const auto& s : top_sets) hi = std::max(hi, indicator_norm(s));
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& s : bottom_sets) lo = std::min(lo, indicator_norm(s));
    DemocracyRow row;
    row.n = n;
    row.phi_l = lo;
    row.phi_u = hi;
    row.ratio = hi / lo;
    row.method = "heuristic";
    attach_analytic(row, limits);
    table.rows.push_back(std::move(row));
  }
  return table;
}

double right_dominance_ratio(const SpaceDescriptor& space, std::size_t trials,
                             std::uint64_t seed, std::size_t window) {
  if (space.kind() != SpaceDescriptor::Kind::nakano)
    throw std::invalid_argument("right-dominance sampling is for Nakano descriptors");
  if (window < 4) throw std::invalid_argument("window too small");
  const auto& exps = space.exponents();
  double prev = exps.value(1);
  for (std::size_t n = 2; n <= window; ++n) {
    const double v = exps.value(n);
    if (v > prev + 1e-12)
      throw std::invalid_argument("right-dominance sampling needs nonincreasing exponents");
    prev = v;
  }

  const MusielakSpace& ms = space.musielak();
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::size_t pairs = 1 + rng.below(4);
    while (window / (2 * pairs) < 2) --pairs;
    const std::size_t seg = window / (2 * pairs);

    std::vector<VectorEntry> all_x, all_y;
    for (std::size_t j = 0; j < pairs; ++j) {
      const std::size_t x_first = 2 * j * seg + 1;
      const std::size_t y_first = (2 * j + 1) * seg + 1;
      std::vector<VectorEntry> xs, ys;
      for (std::size_t k = 0; k < seg; ++k) {
        if (rng.next() & 1u) xs.push_back({x_first + k, rng.sign() * rng.uniform(0.1, 1.0)});
        if (rng.next() & 1u) ys.push_back({y_first + k, rng.sign() * rng.uniform(0.1, 1.0)});
      }
      if (xs.empty()) xs.push_back({x_first, rng.sign() * rng.uniform(0.1, 1.0)});
      if (ys.empty()) ys.push_back({y_first, rng.sign() * rng.uniform(0.1, 1.0)});

      const double nx = luxemburg_norm(ms, FiniteVector(xs));
      const double ny = luxemburg_norm(ms, FiniteVector(ys));
      const double shrink = (1.0 - rng.uniform()) * ny / nx;  // ||x_j|| <= ||y_j||
      for (auto& e : xs) e.value *= shrink;
      all_x.insert(all_x.end(), xs.begin(), xs.end());
      all_y.insert(all_y.end(), ys.begin(), ys.end());
    }
    const double num = luxemburg_norm(ms, FiniteVector(all_x));
    const double den = luxemburg_norm(ms, FiniteVector(all_y));
    worst = std::max(worst, num / den);
  }
  return worst;
}

EmbeddingConstants embedding_constants(const DemocracyTable& table, const Weight& w) {
  if (table.rows.empty()) throw std::invalid_argument("democracy table is empty");
  EmbeddingConstants constants{0.0, 0.0};
  for (const auto& row : table.rows) {
    const double s = w.primitive(row.n);
    constants.sup_s_over_phi_l = std::max(constants.sup_s_over_phi_l, s / row.phi_l);
    constants.sup_phi_u_over_s = std::max(constants.sup_phi_u_over_s, row.phi_u / s);
  }
  return constants;
}

}  // namespace seqspace
