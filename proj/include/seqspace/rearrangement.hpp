#pragma once

#include <vector>

#include "seqspace/finite_vector.hpp"
#include "seqspace/weights.hpp"

namespace seqspace {

// Magnitudes of x sorted nonincreasing; length = support size.
std::vector<double> decreasing_rearrangement(const FiniteVector& x);

// sup_{n <= support} (1/s_n) sum_{i<=n} a_i^*. The sup over all n is attained
// within the support: beyond it the partial sums are constant while s_n keeps
// growing. Requires w nonincreasing over the scanned range.
double marcinkiewicz_norm(const Weight& w, const FiniteVector& x);

// sum_n a_n^* w_n. Requires w nonincreasing over the scanned range.
double lorentz_d1_norm(const Weight& w, const FiniteVector& x);

// sup_n (sum_{i<=n} v_i) a_n^* (a quasi-norm; no shape requirement on v).
double weak_lorentz_norm(const Weight& v, const FiniteVector& x);

// Fundamental function of the equidistributed block sequence built from the
// nonincreasing profile y, in d_{w,1}:
//   sum_j y_j sum_{n=(j-1)N+1}^{jN} w_n.
double block_fundamental(const Weight& w, const std::vector<double>& y, std::size_t n_blocks);

// v_N = sum_j (y_j - y_{j+1}) sum_{n=1+j(N-1)}^{jN} w_n. Partial sums of v
// reproduce block_fundamental (summation by parts), and v_N is nonincreasing
// in N whenever w decreases.
double v_weight(const Weight& w, const std::vector<double>& y, std::size_t n);

}  // namespace seqspace
