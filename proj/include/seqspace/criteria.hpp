#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/exponents.hpp"
#include "seqspace/modular.hpp"
#include "seqspace/orlicz.hpp"

namespace seqspace {

enum class Verdict { holds, fails, inconclusive };

std::string to_string(Verdict v);

// Evidence attached to a verdict: named numbers plus free-form notes, kept
// deliberately flat so it serializes the same way every run.
struct Evidence {
  std::vector<std::pair<std::string, double>> numbers;
  std::vector<std::pair<std::string, std::string>> notes;

  void add(std::string key, double value) { numbers.emplace_back(std::move(key), value); }
  void note(std::string key, std::string value) { notes.emplace_back(std::move(key), value); }
};

// Outcome of one identification/summability criterion. "holds"/"fails" are
// emitted only when a closed-form tail decides the condition for every n (or
// a finite witness refutes it); prefix-only data yields "inconclusive" with
// trend evidence.
struct CriterionVerdict {
  std::string criterion;
  Verdict verdict = Verdict::inconclusive;
  Evidence evidence;
  std::string basis;  // the mathematical fact the verdict rests on
};

enum class SpaceIdentification { lp, c0, not_identified, unknown };

// Classification of a Nakano space from its exponent descriptor: which
// classical space it coincides with (if any), whether the unit vector basis
// is greedy, whether the space admits any greedy basis, and whether the full
// modular space coincides with the closure of the finitely supported
// vectors (sup p_n finite).
struct NakanoClassification {
  SpaceIdentification identification = SpaceIdentification::unknown;
  double p = 0.0;  // meaningful when identification == lp
  Verdict unit_basis_greedy = Verdict::inconclusive;
  Verdict space_has_greedy_basis = Verdict::inconclusive;
  Verdict density = Verdict::inconclusive;  // sup p_n < inf
  CriterionVerdict detail;
  std::string summary;
};

NakanoClassification nakano_space_verdict(const ExponentSequence& e);

// Scale-count growth condition: log|{n : s_n >= exp(-2^k)}| <= 2^k log R for
// k = 0..k_max, compared in log space so the counts may exceed 1e300.
// Closed-form count functions also get an analytic tail decision; explicit
// scale lists can only refute (a finite scan never proves an all-k claim).
CriterionVerdict condition_c_check(const CountFunction& counts, double r, int k_max);

// Constant-coefficient blocks of the unit vector basis in an Orlicz space:
// block j has length N_j, height s_j with N_j F(s_j) = 1, and the block
// sequence is isometrically the unit vector basis of the flow family with
// scales (s_j). The verifier recomputes both norms on random coefficient
// vectors and compares them to 1e-9.
struct BlockBasis {
  std::vector<std::size_t> lengths;
  std::vector<double> scales;
  std::vector<FiniteVector> blocks;  // x_j = s_j * (indicator of block j)
  std::vector<double> block_norms;
  std::size_t samples = 0;
  double max_isometry_error = 0.0;
  bool pass = false;
};

BlockBasis build_block_basis(const OrliczFunction& f, const std::vector<std::size_t>& lengths,
                             std::size_t samples = 100, std::uint64_t seed = 0);

// A caller-supplied witness for the modular inclusion / doubling criteria.
// The sequence (a_n) is given as a prefix and read as 0 beyond it.
struct MusielakWitness {
  std::vector<double> a;
  double delta = 0.0;
  double b = 1.0;
  double c = 1.0;
};

enum class WitnessRule {
  inclusion,  // G_n(t) < delta  =>  F_n(t) <= C G_n(b t) + a_n
  doubling    // F_n(t) < delta  =>  F_n(2t) <= C F_n(t) + a_n
};

// Verifies (never searches for) a witness on a log-spaced t-grid for each
// sampled n; reports the first violation or a pass at the sampled scale.
// delta <= 0 makes the implication vacuous, which is flagged and holds.
CriterionVerdict musielak_witness_check(const MusielakSpace& f, const MusielakSpace& g,
                                        const MusielakWitness& witness, std::size_t samples,
                                        WitnessRule rule = WitnessRule::inclusion,
                                        std::size_t grid = 64);

}  // namespace seqspace
