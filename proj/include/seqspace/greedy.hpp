#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqspace/finite_vector.hpp"
#include "seqspace/space.hpp"

namespace seqspace {

// Result of one thresholding step: the greedy set, the kept part, and the
// residual. greedy_ratio additionally fills the norms and the ratio.
struct GreedyReport {
  std::size_t n_terms = 0;
  std::vector<std::size_t> selected;  // the greedy index set, ascending
  FiniteVector greedy_part;
  FiniteVector residual;
  double residual_norm = 0.0;
  double sigma = 0.0;  // best N-term error
  double ratio = 0.0;
};

// Keeps the N largest-magnitude coefficients; ties broken by lowest index.
// The threshold property (min magnitude kept >= max magnitude dropped) holds
// by construction. Throws std::invalid_argument when N > support size.
GreedyReport greedy_step(const FiniteVector& x, std::size_t n_terms);

// Best N-term approximation error: min over all N-subsets A of the support
// of || x restricted off A ||. All norms implemented here are lattice norms,
// so the optimal coefficients on A equal x's own and the infimum over
// arbitrary coefficients reduces to this support search. Supports larger
// than 22 exceed the combinatorial budget: subsample before calling.
double best_nterm_error(const SpaceDescriptor& space, const FiniteVector& x, std::size_t n_terms);

// || x - G_N(x) || / sigma_N(x); 0/0 is reported as 1.
double greedy_ratio(const SpaceDescriptor& space, const FiniteVector& x, std::size_t n_terms);
GreedyReport greedy_ratio_report(const SpaceDescriptor& space, const FiniteVector& x,
                                 std::size_t n_terms);

struct DemocracyRow {
  std::size_t n = 0;
  double phi_l = 0.0;
  double phi_u = 0.0;
  double ratio = 0.0;  // phi_u / phi_l
  std::string method;  // exact-symmetric | monotone-window | exhaustive | heuristic
  // Analytic tail values from the descriptor's limit, reported separately
  // from the window-bounded numerics and never conflated with them.
  std::optional<double> phi_l_analytic;
  std::optional<double> phi_u_analytic;
};

struct DemocracyTable {
  std::vector<DemocracyRow> rows;
  double max_ratio() const;
};

// phi_l(N) = inf_{|A| >= N} ||1_A||, phi_u(N) = sup_{|A| <= N} ||1_A|| over
// the index window [1, window]; both extrema are attained at |A| = N because
// the norms are lattice norms. Fast paths: symmetric spaces (any N-set),
// Nakano with monotone exponents (head/tail sets); otherwise exhaustive
// enumeration for window <= 20 and a per-threshold top/bottom-N heuristic
// over a grid of thresholds beyond that.
DemocracyTable democracy_functions(const SpaceDescriptor& space, std::size_t n_max,
                                   std::size_t window);

// Empirical right-dominance constant for a Nakano space with nonincreasing
// exponents: max over random trials of ||sum x_j|| / ||sum y_j|| where each
// x_j sits entirely left of y_j, blocks within each family are disjoint, and
// x_j is scaled so ||x_j|| <= ||y_j||. Reports, never asserts, a value.
double right_dominance_ratio(const SpaceDescriptor& space, std::size_t trials,
                             std::uint64_t seed, std::size_t window = 64);

struct EmbeddingConstants {
  double sup_s_over_phi_l;
  double sup_phi_u_over_s;
};

// Range-bounded constants comparing a democracy table with a primitive
// weight; bounded values are finite-scale evidence for the weak-Lorentz /
// Lorentz embeddings induced by the basis.
EmbeddingConstants embedding_constants(const DemocracyTable& table, const Weight& w);

}  // namespace seqspace
