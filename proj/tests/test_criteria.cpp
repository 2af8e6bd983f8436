#include <doctest.h>

#include <cmath>
#include <vector>

#include "seqspace/criteria.hpp"
#include "seqspace/errors.hpp"
#include "seqspace/json_io.hpp"
#include "seqspace/random.hpp"

using namespace seqspace;

TEST_CASE("nakano verdicts for the three reference families") {
  // p_n = 1 + 1/log(n+1): the drift log(n)|p_n - 1| stays below 1.
  const auto to_l1 =
      nakano_space_verdict(ExponentSequence({}, ConvergentTail{1.0, RateKind::one_over_log, 1.0}));
  CHECK(to_l1.identification == SpaceIdentification::lp);
  CHECK(to_l1.p == 1.0);
  CHECK(to_l1.unit_basis_greedy == Verdict::holds);
  CHECK(to_l1.space_has_greedy_basis == Verdict::holds);
  CHECK(to_l1.density == Verdict::holds);

  // p_n = 1 + 1/sqrt(log(n+2)): drift sqrt(log n) diverges and the geometric
  // series in 1/|p_n - 1| diverges for every ratio.
  const auto no_greedy = nakano_space_verdict(
      ExponentSequence({}, ConvergentTail{1.0, RateKind::one_over_sqrt_log, 1.0}));
  CHECK(no_greedy.identification == SpaceIdentification::not_identified);
  CHECK(no_greedy.unit_basis_greedy == Verdict::fails);
  CHECK(no_greedy.space_has_greedy_basis == Verdict::fails);

  // p_n = log2(n+2): sum r^{p_n} converges for r < 1/2.
  const auto to_c0 = nakano_space_verdict(
      ExponentSequence({}, DivergentTail{GrowthKind::log2, 1.0, 2.0, 0.0, {}}));
  CHECK(to_c0.identification == SpaceIdentification::c0);
  CHECK(to_c0.unit_basis_greedy == Verdict::holds);
  CHECK(to_c0.space_has_greedy_basis == Verdict::holds);
  CHECK(to_c0.density == Verdict::fails);
}

TEST_CASE("nakano verdicts for the remaining tails") {
  const auto constant = nakano_space_verdict(ExponentSequence::constant(2));
  CHECK(constant.identification == SpaceIdentification::lp);
  CHECK(constant.p == 2.0);
  CHECK(constant.summary.find("l_2") != std::string::npos);

  const auto oscillating =
      nakano_space_verdict(ExponentSequence({}, OscillatingTail{1.0, 2.0, 2}));
  CHECK(oscillating.identification == SpaceIdentification::not_identified);
  CHECK(oscillating.unit_basis_greedy == Verdict::fails);
  CHECK(oscillating.density == Verdict::holds);

  // Exponents drifting to a limit above one at the slow rate: the unit
  // vector basis is not greedy but existence is left open.
  const auto slow_above = nakano_space_verdict(
      ExponentSequence({}, ConvergentTail{2.0, RateKind::one_over_sqrt_log, 1.0}));
  CHECK(slow_above.unit_basis_greedy == Verdict::fails);
  CHECK(slow_above.space_has_greedy_basis == Verdict::inconclusive);

  // log(log n) growth: diverges to infinity but no geometric sum converges.
  const auto slow_divergent = nakano_space_verdict(
      ExponentSequence({}, DivergentTail{GrowthKind::log_log, 1.0, 16.0, 0.0, {}}));
  CHECK(slow_divergent.identification == SpaceIdentification::not_identified);
  CHECK(slow_divergent.space_has_greedy_basis == Verdict::fails);
  CHECK(slow_divergent.density == Verdict::fails);

  // Prefix-only descriptors report trends, not verdicts.
  const auto prefix_only = nakano_space_verdict(ExponentSequence({1.5, 1.4, 1.3}));
  CHECK(prefix_only.identification == SpaceIdentification::unknown);
  CHECK(prefix_only.detail.verdict == Verdict::inconclusive);

  const auto counts_tail =
      nakano_space_verdict(ExponentSequence({}, CountsTail{CountFunction::exp_decay()}));
  CHECK(counts_tail.detail.verdict == Verdict::inconclusive);
}

TEST_CASE("constant-tail verdict matches the norm it promises") {
  // The classification says the space is exactly l_p; the Luxemburg norm must
  // then agree with the closed form.
  Rng rng(53);
  const double p = 1.7;
  const auto verdict = nakano_space_verdict(ExponentSequence::constant(p));
  CHECK(verdict.identification == SpaceIdentification::lp);
  const auto space = MusielakSpace::nakano(ExponentSequence::constant(p));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<VectorEntry> entries;
    for (std::size_t i = 1; i <= 6; ++i)
      entries.push_back({i, rng.sign() * rng.uniform(0.1, 2.0)});
    const FiniteVector x(entries);
    double sum = 0.0;
    for (const auto& e : x.entries()) sum += std::pow(std::fabs(e.value), p);
    CHECK(luxemburg_norm(space, x) ==
          doctest::Approx(std::pow(sum, 1.0 / p)).epsilon(1e-10));
  }
}

TEST_CASE("verdicts are deterministic") {
  const auto e = ExponentSequence({}, ConvergentTail{1.0, RateKind::one_over_log, 1.0});
  const auto a = verdict_to_json(nakano_space_verdict(e).detail).dump();
  const auto b = verdict_to_json(nakano_space_verdict(e).detail).dump();
  CHECK(a == b);
}

TEST_CASE("scale-count growth condition") {
  // s_n = e^{-n}: counts 2^k against bound R^{2^k} with R = 2.
  const auto pass = condition_c_check(CountFunction::exp_decay(), 2.0, 20);
  CHECK(pass.verdict == Verdict::holds);

  // k_max = 0 is a single comparison; the closed form still settles the tail.
  CHECK(condition_c_check(CountFunction::exp_decay(), 2.0, 0).verdict == Verdict::holds);

  // Below sqrt(2) the bound breaks at k = 1 or 2.
  CHECK(condition_c_check(CountFunction::exp_decay(), 1.3, 20).verdict == Verdict::fails);

  // s_n = 1/log(n+1): the count is exp(e^{2^k}) - 1; every R fails by k = 5.
  for (double r : {2.0, 10.0, 1e3, 1e6}) {
    const auto fail = condition_c_check(CountFunction::one_over_log(), r, 8);
    CHECK(fail.verdict == Verdict::fails);
    double witness = -1.0;
    for (const auto& [key, value] : fail.evidence.numbers)
      if (key == "first_violation_k") witness = value;
    CHECK(witness >= 0.0);
    CHECK(witness <= 5.0);
  }

  // Enumeration cross-check at k <= 4: the closed form equals a literal scan.
  {
    std::vector<double> scales;
    for (std::size_t n = 1; n <= 1000; ++n) scales.push_back(std::exp(-double(n)));
    const auto enumerated = CountFunction::from_scales(scales);
    const auto closed = CountFunction::exp_decay();
    for (int k = 0; k <= 4; ++k)
      CHECK(std::exp(enumerated.log_count(k)) ==
            doctest::Approx(std::exp(closed.log_count(k))).epsilon(1e-9));
    // A finite list can refute but never prove.
    CHECK(condition_c_check(enumerated, 2.0, 4).verdict == Verdict::inconclusive);
  }

  CHECK_THROWS_AS(condition_c_check(CountFunction::exp_decay(), 0.9, 4), std::invalid_argument);
}

TEST_CASE("block basis construction") {
  // Powers: N F(s) = 1 gives s = N^{-1/p} in closed form.
  const auto power_blocks = build_block_basis(OrliczFunction::power(2), {4, 9, 16}, 25, 0);
  CHECK(power_blocks.scales[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(power_blocks.scales[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(power_blocks.scales[2] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(power_blocks.pass);

  // Blocks sit on consecutive disjoint index ranges at height s_j.
  CHECK(power_blocks.blocks.size() == 3);
  CHECK(power_blocks.blocks[1].support_size() == 9);
  CHECK(power_blocks.blocks[1].entries().front().index == 5);
  CHECK(power_blocks.blocks[1].entries().back().index == 13);
  CHECK(power_blocks.blocks[1].entries().front().value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // Length-one blocks are unit vectors.
  const auto trivial = build_block_basis(OrliczFunction::fpa(1, 1), {1, 1, 1}, 25, 0);
  for (double s : trivial.scales) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trivial.max_isometry_error <= 1e-11);

  // Each block is normalized: the modular at t = 1 is N_j F(s_j) = 1.
  for (const auto& f : {OrliczFunction::fpa(1, 1), OrliczFunction::fpa(2, 1)}) {
    const auto blocks = build_block_basis(f, {2, 4, 8}, 50, 3);
    for (double norm : blocks.block_norms) CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(blocks.pass);
    CHECK(blocks.max_isometry_error <= 1e-9);
  }

  CHECK_THROWS_AS(build_block_basis(OrliczFunction::power(2), {}, 10, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_block_basis(OrliczFunction::power(2), {200000}, 10, 0), BudgetError);
}

TEST_CASE("witness verification") {
  const auto nakano2 = MusielakSpace::nakano(ExponentSequence::constant(2));

  // Identity inclusion with the trivial witness.
  const auto identity = musielak_witness_check(nakano2, nakano2, {{}, 0.5, 1.0, 1.0}, 16);
  CHECK(identity.verdict != Verdict::fails);
  bool pass_note = false;
  for (const auto& [key, value] : identity.evidence.notes) pass_note |= key == "pass_at_scale";
  CHECK(pass_note);

  // Power pair with the geometric perturbation: t^2 <= t^1.5 + a_n below 1.
  const auto nakano15 = MusielakSpace::nakano(ExponentSequence::constant(1.5));
  MusielakWitness young;
  young.delta = 0.5;
  young.b = 1.0;
  young.c = 1.0;
  for (int n = 0; n < 64; ++n)
    young.a.push_back(std::pow(0.5, 2.0 * 1.5 / 0.5));  // r^{pq/(p-q)}
  CHECK(musielak_witness_check(nakano2, nakano15, young, 64).verdict != Verdict::fails);

  // Doubling rule: F^{1,1} satisfies F(2t) <= 4 F(t) below level 1/4.
  const auto orlicz = MusielakSpace::orlicz(OrliczFunction::fpa(1, 1));
  const auto doubling =
      musielak_witness_check(orlicz, orlicz, {{}, 0.25, 1.0, 4.0}, 8, WitnessRule::doubling);
  CHECK(doubling.verdict != Verdict::fails);

  // A violated witness: t^1 <= C t^2 + 0 fails near zero for any fixed C.
  const auto nakano1 = MusielakSpace::nakano(ExponentSequence::constant(1));
  const auto violated =
      musielak_witness_check(nakano1, nakano2, {{}, 0.5, 1.0, 10.0}, 8);
  CHECK(violated.verdict == Verdict::fails);

  // delta = 0 leaves nothing to check.
  const auto vacuous = musielak_witness_check(nakano2, nakano2, {{}, 0.0, 1.0, 1.0}, 8);
  CHECK(vacuous.verdict == Verdict::holds);
  bool vacuous_note = false;
  for (const auto& [key, value] : vacuous.evidence.notes) vacuous_note |= key == "vacuous";
  CHECK(vacuous_note);
}
