#include "seqspace/criteria.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "seqspace/errors.hpp"
#include "seqspace/random.hpp"

namespace seqspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_p(double p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

// Max over n = 2, 4, 8, ..., 2^20 of log(n) |p_n - p|.
double sampled_drift(const ExponentSequence& e, double p) {
  double sup = 0.0;
  for (std::size_t n = 2; n <= (1u << 20); n *= 2)
    sup = std::max(sup, std::log(static_cast<double>(n)) * std::fabs(e.value(n) - p));
  return sup;
}

double partial_geometric_sum(const ExponentSequence& e, double r, std::size_t up_to) {
  double sum = 0.0;
  for (std::size_t n = 1; n <= up_to; ++n) sum += std::pow(r, e.value(n));
  return sum;
}

// Partial sums of sum_n r^{1/|p_n - p|}, the series deciding whether the
// space can coincide with l_p.
double partial_inverse_drift_sum(const ExponentSequence& e, double p, double r,
                                 std::size_t up_to) {
  double sum = 0.0;
  for (std::size_t n = 1; n <= up_to; ++n) {
    const double gap = std::fabs(e.value(n) - p);
    if (gap > 0.0) sum += std::pow(r, 1.0 / gap);
  }
  return sum;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

NakanoClassification nakano_space_verdict(const ExponentSequence& e) {
  NakanoClassification out;
  out.detail.criterion = "nakano-identification";

  const auto& tail = e.tail();

  if (e.is_constant()) {
    const double p = std::get<ConstantTail>(tail).p;
    out.identification = SpaceIdentification::lp;
    out.p = p;
    out.unit_basis_greedy = Verdict::holds;
    out.space_has_greedy_basis = Verdict::holds;
    out.density = Verdict::holds;
    out.detail.verdict = Verdict::holds;
    out.detail.evidence.add("p", p);
    out.detail.basis =
        "constant exponents give exactly l_p, whose unit vector basis is 1-symmetric and greedy";
    out.summary = "unit vector basis greedy; = l_" + format_p(p) + "; democracy ratio 1.0";
    return out;
  }

  if (const auto* c = std::get_if<ConvergentTail>(&tail)) {
    const double p = c->p;
    if (c->rate == RateKind::one_over_log) {
      // log(n) |p_n - p| = |c| log(n)/log(n+1), bounded by |c|.
      out.identification = SpaceIdentification::lp;
      out.p = p;
      out.unit_basis_greedy = Verdict::holds;
      out.space_has_greedy_basis = Verdict::holds;
      out.density = Verdict::holds;
      out.detail.verdict = Verdict::holds;
      out.detail.evidence.add("p", p);
      out.detail.evidence.add("drift_bound", std::fabs(c->c));
      out.detail.evidence.add("drift_sup_sampled", sampled_drift(e, p));
      out.detail.basis =
          "a monotone exponent sequence with sup_n log(n)|p_n - p| finite gives a space equal to "
          "l_p, and the unit vector basis of l_p is greedy";
      out.summary = "unit vector basis greedy; = l_" + format_p(p) + "; democracy ratio 1.0";
      return out;
    }
    // 1/sqrt(log) drift: log(n)|p_n - p| ~ |c| sqrt(log n) is unbounded.
    out.identification = SpaceIdentification::not_identified;
    out.unit_basis_greedy = Verdict::fails;
    out.density = Verdict::holds;
    out.detail.evidence.add("p", p);
    out.detail.evidence.add("drift_sup_sampled", sampled_drift(e, p));
    if (std::fabs(p - 1.0) <= 1e-12 && c->c > 0.0) {
      // r^{1/|p_n - 1|} = exp(-log(1/r) sqrt(log(n+2))/c) eventually exceeds
      // 1/n for every r in (0, 1), so the series diverges for every r.
      out.space_has_greedy_basis = Verdict::fails;
      out.detail.verdict = Verdict::fails;
      out.detail.evidence.add("inverse_drift_sum_r_half_n_4096",
                              partial_inverse_drift_sum(e, 1.0, 0.5, 4096));
      out.detail.evidence.add("inverse_drift_sum_r_half_n_65536",
                              partial_inverse_drift_sum(e, 1.0, 0.5, 65536));
      out.detail.basis =
          "log(n)|p_n - 1| is unbounded, so the space differs from l_1; and since "
          "sum_n r^{1/|p_n - 1|} diverges for every r in (0,1), the space admits no greedy basis";
      out.summary = "unit vector basis not greedy; no greedy basis";
    } else {
      out.space_has_greedy_basis = Verdict::inconclusive;
      out.detail.verdict = Verdict::fails;
      out.detail.basis =
          "log(n)|p_n - p| is unbounded for a monotone sequence, so the space is not l_p and its "
          "unit vector basis is not greedy";
      out.summary = "unit vector basis not greedy; not identified with any l_p";
    }
    return out;
  }

  if (const auto* d = std::get_if<DivergentTail>(&tail)) {
    out.density = Verdict::fails;  // sup p_n = inf
    if (d->kind == GrowthKind::log_log) {
      // r^{p_n} = (log n)^{scale log r}; the terms dominate 1/n, so the
      // series diverges for every r in (0, 1).
      out.identification = SpaceIdentification::not_identified;
      out.unit_basis_greedy = Verdict::fails;
      out.space_has_greedy_basis = Verdict::fails;
      out.detail.verdict = Verdict::fails;
      out.detail.evidence.add("partial_sum_r_half_n_65536",
                              partial_geometric_sum(e, 0.5, 65536));
      out.detail.basis =
          "sum_n r^{p_n} diverges for every r in (0,1), so the space is not c_0; a space whose "
          "exponents grow to infinity has a greedy basis only if it is c_0";
      out.summary = "unit vector basis not greedy; no greedy basis";
      return out;
    }
    // Geometric witness: for log-type growth sum r^{p_n} is a p-series with
    // exponent scale * log_b(1/r); square-root or linear growth converges for
    // every r < 1.
    double witness_r = 0.5;
    if (d->kind == GrowthKind::log2) witness_r = 0.5 * std::exp2(-1.0 / d->scale);
    if (d->kind == GrowthKind::log_e) witness_r = 0.5 * std::exp(-1.0 / d->scale);
    out.identification = SpaceIdentification::c0;
    out.unit_basis_greedy = Verdict::holds;
    out.space_has_greedy_basis = Verdict::holds;
    out.detail.verdict = Verdict::holds;
    out.detail.evidence.add("witness_r", witness_r);
    out.detail.evidence.add("partial_sum_witness_n_65536",
                            partial_geometric_sum(e, witness_r, 65536));
    out.detail.basis =
        "sum_n r^{p_n} is finite for some r in (0,1), so the space carries an equivalent sup "
        "norm and equals c_0, whose unit vector basis is greedy";
    out.summary = "unit vector basis greedy; = c_0";
    return out;
  }

  if (const auto* o = std::get_if<OscillatingTail>(&tail)) {
    if (o->p1 == o->p2) {
      // Degenerate pattern; classify as the constant sequence.
      return nakano_space_verdict(ExponentSequence(e.prefix(), ConstantTail{o->p1}));
    }
    const double lo = std::min(o->p1, o->p2), hi = std::max(o->p1, o->p2);
    out.identification = SpaceIdentification::not_identified;
    out.unit_basis_greedy = Verdict::fails;
    out.space_has_greedy_basis = Verdict::inconclusive;
    out.density = Verdict::holds;
    out.detail.verdict = Verdict::fails;
    out.detail.evidence.add("p_low", lo);
    out.detail.evidence.add("p_high", hi);
    out.detail.evidence.add("democracy_ratio_exponent", 1.0 / lo - 1.0 / hi);
    out.detail.basis =
        "exponents with two distinct cluster points give indicator sums of sizes N^{1/p_low} and "
        "N^{1/p_high}, so the unit vector basis is not democratic";
    out.summary = "unit vector basis not greedy (not democratic); democracy ratio grows like N^" +
                  format_p(1.0 / lo - 1.0 / hi);
    return out;
  }

  // Prefix-only or counts/conjugate tails: report trends, decide nothing.
  out.detail.verdict = Verdict::inconclusive;
  if (std::holds_alternative<UnspecifiedTail>(tail) && e.prefix_size() > 0) {
    const double p_hat = e.prefix().back();
    double drift = 0.0, partial = 0.0;
    for (std::size_t n = 1; n <= e.prefix_size(); ++n) {
      drift = std::max(drift, std::log(static_cast<double>(std::max<std::size_t>(n, 2))) *
                                  std::fabs(e.value(n) - p_hat));
      partial += std::pow(0.5, e.value(n));
    }
    out.detail.evidence.add("p_last", p_hat);
    out.detail.evidence.add("drift_sup_prefix", drift);
    out.detail.evidence.add("partial_sum_r_half_prefix", partial);
    out.detail.basis =
        "a finite prefix cannot decide conditions that quantify over all n; trend data only";
    out.summary = "inconclusive at scale (prefix-only descriptor)";
  } else {
    out.detail.basis = "this tail descriptor carries no closed form the criteria can consume";
    out.summary = "inconclusive (descriptor not classifiable)";
  }
  return out;
}

CriterionVerdict condition_c_check(const CountFunction& counts, double r, int k_max) {
  if (!(r > 1.0)) throw std::invalid_argument("the growth base R must exceed 1");
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");

  CriterionVerdict out;
  out.criterion = "scale-count-growth";
  out.basis =
      "flow scales s_n concentrate slowly enough for an l_p identification exactly when "
      "|{n : s_n >= exp(-2^k)}| <= R^{2^k} for some R and all k";

  const double log_r = std::log(r);
  int first_violation = -1;
  for (int k = 0; k <= k_max; ++k) {
    const double lhs = counts.log_count(k);
    const double rhs = std::exp2(static_cast<double>(k)) * log_r;
    if (k <= 3 || k == k_max) {
      out.evidence.add("log_count_k" + std::to_string(k), lhs);
      out.evidence.add("bound_k" + std::to_string(k), rhs);
    }
    if (lhs > rhs && first_violation < 0) first_violation = k;
  }

  if (first_violation >= 0) {
    out.verdict = Verdict::fails;
    out.evidence.add("first_violation_k", first_violation);
    return out;
  }

  switch (counts.form()) {
    case CountFunction::Form::exp_decay:
      // log-count = k log 2 against 2^k log R; the ratio k/2^k peaks at 1/2,
      // so the all-k condition holds exactly when R >= sqrt(2).
      if (r >= std::sqrt(2.0) - 1e-15) {
        out.verdict = Verdict::holds;
        out.evidence.note("tail", "k log 2 <= 2^k log R for all k since R >= sqrt(2)");
      } else {
        out.verdict = Verdict::fails;
        out.evidence.add("first_violation_k", 1);
        out.evidence.note("tail", "R < sqrt(2) violates the bound at k = 1 or 2");
      }
      return out;
    case CountFunction::Form::one_over_log: {
      // log-count = e^{2^k}, which outgrows 2^k log R for every R.
      out.verdict = Verdict::fails;
      int k = 0;
      while (counts.log_count(k) <= std::exp2(static_cast<double>(k)) * log_r && k < 64) ++k;
      out.evidence.add("first_violation_k", k);
      out.evidence.note("tail", "e^{2^k} outgrows 2^k log R for every R > 1");
      return out;
    }
    case CountFunction::Form::explicit_scales:
      out.verdict = Verdict::inconclusive;
      out.evidence.note("tail", "finite scale list: a scan can refute but never prove the all-k claim");
      return out;
  }
  return out;
}

BlockBasis build_block_basis(const OrliczFunction& f, const std::vector<std::size_t>& lengths,
                             std::size_t samples, std::uint64_t seed) {
  if (lengths.empty()) throw std::invalid_argument("no block lengths given");
  std::size_t total = 0;
  for (std::size_t len : lengths) {
    if (len == 0) throw std::invalid_argument("block lengths must be positive");
    total += len;
  }
  if (total > 100000) throw BudgetError("total block length exceeds the vector budget");

  BlockBasis out;
  out.lengths = lengths;
  out.scales.reserve(lengths.size());
  for (std::size_t len : lengths) {
    // Solve F(s) = 1/len on (0, 1]: F(0) = 0 below, F(1) = 1 above.
    const double target = 1.0 / static_cast<double>(len);
    if (!(f(1.0) >= target)) throw ShapeError("function does not bracket the block equation");
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (f(mid) >= target)
        hi = mid;
      else
        lo = mid;
    }
    out.scales.push_back(0.5 * (lo + hi));
  }

  const MusielakSpace ambient = MusielakSpace::orlicz(f);
  const MusielakSpace flow_space =
      MusielakSpace::flow_family(f, ScaleSequence(out.scales));

  std::vector<std::size_t> offsets(lengths.size(), 0);
  for (std::size_t j = 1; j < lengths.size(); ++j) offsets[j] = offsets[j - 1] + lengths[j - 1];

  for (std::size_t j = 0; j < lengths.size(); ++j) {
    std::vector<VectorEntry> entries;
    for (std::size_t k = 1; k <= lengths[j]; ++k)
      entries.push_back({offsets[j] + k, out.scales[j]});
    out.blocks.emplace_back(std::move(entries));
    out.block_norms.push_back(luxemburg_norm(ambient, out.blocks.back()));
  }

  Rng rng(seed);
  out.samples = samples;
  for (std::size_t sample = 0; sample < samples; ++sample) {
    std::vector<VectorEntry> expanded, coefficients;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
      const double a = rng.uniform(-1.0, 1.0);
      if (a == 0.0) continue;
      coefficients.push_back({j + 1, a});
      for (std::size_t k = 1; k <= lengths[j]; ++k)
        expanded.push_back({offsets[j] + k, a * out.scales[j]});
    }
    const double lhs = luxemburg_norm(ambient, FiniteVector(std::move(expanded)));
    const double rhs = luxemburg_norm(flow_space, FiniteVector(std::move(coefficients)));
    out.max_isometry_error =
        std::max(out.max_isometry_error, std::fabs(lhs - rhs) / std::max(1.0, rhs));
  }
  out.pass = out.max_isometry_error <= 1e-9;
  return out;
}

CriterionVerdict musielak_witness_check(const MusielakSpace& f, const MusielakSpace& g,
                                        const MusielakWitness& witness, std::size_t samples,
                                        WitnessRule rule, std::size_t grid) {
  if (samples == 0) throw std::invalid_argument("need at least one sampled coordinate");
  if (grid < 2) throw std::invalid_argument("grid too small");

  CriterionVerdict out;
  out.criterion = rule == WitnessRule::inclusion ? "modular-inclusion-witness"
                                                 : "modular-doubling-witness";
  out.basis = rule == WitnessRule::inclusion
                  ? "one modular space embeds in another exactly when, below some modular level, "
                    "each F_n is dominated by C G_n(b t) plus a summable perturbation a_n"
                  : "the finitely supported vectors are dense exactly when, below some modular "
                    "level, each F_n(2t) is dominated by C F_n(t) plus a summable a_n";

  if (witness.delta <= 0.0) {
    out.verdict = Verdict::holds;
    out.evidence.note("vacuous", "delta <= 0 leaves no t below the modular level");
    return out;
  }

  const double lo = std::log(1e-9), hi = std::log(2.0);
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= samples; ++n) {
    const double a_n = n <= witness.a.size() ? witness.a[n - 1] : 0.0;
    for (std::size_t i = 0; i < grid; ++i) {
      const double t =
          std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1));
      double guard, lhs, rhs;
      if (rule == WitnessRule::inclusion) {
        guard = g.coordinate(n, t);
        lhs = f.coordinate(n, t);
        rhs = witness.c * g.coordinate(n, witness.b * t) + a_n;
      } else {
        guard = f.coordinate(n, t);
        lhs = f.coordinate(n, 2.0 * t);
        rhs = witness.c * f.coordinate(n, t) + a_n;
      }
      if (guard >= witness.delta) continue;
      ++checked;
      if (lhs > rhs + 1e-12 * std::max(1.0, rhs)) {
        out.verdict = Verdict::fails;
        out.evidence.add("violation_n", static_cast<double>(n));
        out.evidence.add("violation_t", t);
        out.evidence.add("violation_lhs", lhs);
        out.evidence.add("violation_rhs", rhs);
        return out;
      }
    }
  }

  out.verdict = Verdict::inconclusive;
  out.evidence.add("sampled_n", static_cast<double>(samples));
  out.evidence.add("grid_points_checked", static_cast<double>(checked));
  out.evidence.note("pass_at_scale", "no violation on the sampled range");
  return out;
}

}  // namespace seqspace
