#include <doctest.h>

#include <cmath>
#include <vector>

#include "seqspace/errors.hpp"
#include "seqspace/modular.hpp"
#include "seqspace/random.hpp"

using namespace seqspace;

namespace {

FiniteVector random_vector(Rng& rng, std::size_t max_index, std::size_t support) {
  std::vector<VectorEntry> entries;
  std::vector<bool> used(max_index + 1, false);
  while (entries.size() < support) {
    const std::size_t idx = 1 + rng.below(max_index);
    if (used[idx]) continue;
    used[idx] = true;
    entries.push_back({idx, rng.sign() * rng.uniform(0.1, 2.0)});
  }
  return FiniteVector(std::move(entries));
}

ExponentSequence random_exponents(Rng& rng, std::size_t length, double lo = 1.0,
                                  double hi = 4.0) {
  std::vector<double> prefix(length);
  for (auto& p : prefix) p = rng.uniform(lo, hi);
  return ExponentSequence(std::move(prefix));
}

}  // namespace

TEST_CASE("modular examples") {
  CHECK(modular(MusielakSpace::nakano(ExponentSequence::constant(2)),
                FiniteVector::dense({3, 4})) == doctest::Approx(25.0).epsilon(1e-14));
  CHECK(modular(MusielakSpace::nakano(ExponentSequence({1, 2})),
                FiniteVector::dense({1, 1})) == doctest::Approx(2.0).epsilon(1e-14));
  const auto flow_space =
      MusielakSpace::flow_family(OrliczFunction::fpa(1, 1), ScaleSequence::exp_minus_n());
  CHECK(modular(flow_space, FiniteVector::unit(1)) == doctest::Approx(1.0).epsilon(1e-14));

  // Index beyond the prefix with no closed form.
  const auto prefix_only = MusielakSpace::nakano(ExponentSequence({2, 2}));
  CHECK_THROWS_AS(modular(prefix_only, FiniteVector::unit(3)), DescriptorError);
}

TEST_CASE("luxemburg norm examples") {
  CHECK(luxemburg_norm(MusielakSpace::nakano(ExponentSequence::constant(2)),
                       FiniteVector::dense({3, 4})) == doctest::Approx(5.0).epsilon(1e-11));

  // Nakano p = (1, 2), x = (1, 1): the norm solves 1/t + 1/t^2 = 1.
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(luxemburg_norm(MusielakSpace::nakano(ExponentSequence({1, 2})),
                       FiniteVector::dense({1, 1})) ==
        doctest::Approx(golden).epsilon(1e-11));

  // Unit vectors have norm one in every coordinate.
  const auto spaces = {
      MusielakSpace::nakano(ExponentSequence::constant(1.5)),
      MusielakSpace::orlicz(OrliczFunction::fpa(1, 1)),
      MusielakSpace::flow_family(OrliczFunction::fpa(2, 1), ScaleSequence::exp_minus_n()),
  };
  for (const auto& space : spaces)
    for (std::size_t n : {1, 2, 7})
      CHECK(luxemburg_norm(space, FiniteVector::unit(n)) ==
            doctest::Approx(1.0).epsilon(1e-12));

  CHECK(luxemburg_norm(MusielakSpace::nakano(ExponentSequence::constant(2)),
                       FiniteVector()) == 0.0);
}

TEST_CASE("luxemburg norm properties") {
  Rng rng(7);
  const auto space = MusielakSpace::nakano(random_exponents(rng, 24));

  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_vector(rng, 24, 2 + rng.below(8));

    // Scaling.
    const double c = rng.sign() * rng.uniform(0.1, 10.0);
    CHECK(luxemburg_norm(space, x.scaled(c)) ==
          doctest::Approx(std::fabs(c) * luxemburg_norm(space, x)).epsilon(1e-10));

    // Triangle inequality.
    const auto y = random_vector(rng, 24, 2 + rng.below(8));
    CHECK(luxemburg_norm(space, x + y) <=
          luxemburg_norm(space, x) + luxemburg_norm(space, y) + 1e-10);

    // Sign invariance is exact: the implementation only reads |x_n|.
    std::vector<VectorEntry> flipped = x.entries();
    for (auto& e : flipped)
      if (rng.next() & 1u) e.value = -e.value;
    CHECK(luxemburg_norm(space, FiniteVector(flipped)) == luxemburg_norm(space, x));

    // The infimum is attained: m(x / ||x||) = 1.
    const double norm = luxemburg_norm(space, x);
    CHECK(modular(space, x, 1.0 / norm) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("coordinatewise larger exponents shrink the norm") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> p(16), q(16);
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = rng.uniform(1.0, 3.0);
      q[i] = p[i] + rng.uniform(0.0, 2.0);
    }
    const auto space_p = MusielakSpace::nakano(ExponentSequence(p));
    const auto space_q = MusielakSpace::nakano(ExponentSequence(q));
    const auto x = random_vector(rng, 16, 2 + rng.below(8));
    CHECK(luxemburg_norm(space_q, x) <= luxemburg_norm(space_p, x) + 1e-10);
  }
}

TEST_CASE("bridge between modular and norm") {
  const auto flat = MusielakSpace::nakano(ExponentSequence::constant(2));
  auto report = bridge_check(flat, FiniteVector::dense({3, 4}));
  CHECK(report.norm == doctest::Approx(5.0).epsilon(1e-11));
  CHECK(report.modular_value == doctest::Approx(25.0).epsilon(1e-14));
  CHECK(report.pass);

  const auto mixed = MusielakSpace::nakano(ExponentSequence({1, 2}));
  report = bridge_check(mixed, FiniteVector::dense({1, 1}));
  CHECK(report.modular_value == doctest::Approx(2.0));
  CHECK(report.sup_exponent == 2.0);
  CHECK(report.pass);

  CHECK(bridge_check(flat, FiniteVector()).pass);

  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto space = MusielakSpace::nakano(random_exponents(rng, 16));
    CHECK(bridge_check(space, random_vector(rng, 16, 1 + rng.below(8))).pass);
  }
}

TEST_CASE("conjugate exponents") {
  const auto q2 = conjugate_exponents(ExponentSequence::constant(2));
  for (std::size_t n : {1, 5, 100}) CHECK(q2.value(n) == doctest::Approx(2.0).epsilon(1e-14));

  const auto q43 = conjugate_exponents(ExponentSequence::constant(4.0 / 3.0));
  for (std::size_t n : {1, 5, 100}) CHECK(q43.value(n) == doctest::Approx(4.0).epsilon(1e-12));

  // All-ones: q_n = max(2, 2 log2(n+1)) and sum (1/2)^{q_n} converges.
  const auto q1 = conjugate_exponents(ExponentSequence::constant(1));
  CHECK(q1.value(1) == doctest::Approx(2.0));
  CHECK(q1.value(3) == doctest::Approx(4.0));
  for (std::size_t n : {2, 10, 1000})
    CHECK(q1.value(n) == doctest::Approx(std::max(2.0, 2.0 * std::log2(double(n) + 1.0))));
  double partial_small = 0.0, partial_large = 0.0;
  for (std::size_t n = 1; n <= 1000000; ++n) {
    const double term = std::pow(0.5, q1.value(n));
    if (n <= 1000) partial_small += term;
    partial_large += term;
  }
  CHECK(partial_large < 0.65);                  // below sum (n+1)^{-2}
  CHECK(partial_large - partial_small < 1e-3);  // the tail is already negligible

  // Mixed prefixes conjugate pointwise and stay exact on the tail.
  const auto mixed = conjugate_exponents(
      ExponentSequence({1.5 + 1.0 / std::log(2.0), 1.5 + 1.0 / std::log(3.0)},
                       ConvergentTail{1.5, RateKind::one_over_log, 1.0}));
  const double p7 = 1.5 + 1.0 / std::log(8.0);
  CHECK(mixed.value(7) == doctest::Approx(p7 / (p7 - 1.0)).epsilon(1e-12));
}

TEST_CASE("Hoelder ratio") {
  const auto e2 = ExponentSequence::constant(2);
  CHECK(holder_ratio(e2, FiniteVector::unit(1), FiniteVector::unit(1)) ==
        doctest::Approx(1.0).epsilon(1e-11));
  CHECK(holder_ratio(e2, FiniteVector::dense({3, 4}), FiniteVector::dense({3, 4})) ==
        doctest::Approx(1.0).epsilon(1e-11));

  // Exhaustive coefficient grid on support {1, 2} for p = (1, 2).
  const auto e12 = ExponentSequence({1, 2});
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j) {
      if (i == 0 && j == 0) continue;
      const auto x = FiniteVector::dense({i / 10.0, j / 10.0});
      for (int k = -10; k <= 10; k += 5)
        for (int l = -10; l <= 10; l += 5) {
          if (k == 0 && l == 0) continue;
          const auto y = FiniteVector::dense({k / 10.0, l / 10.0});
          CHECK(holder_ratio(e12, x, y) <= 2.0 + 1e-10);
        }
    }

  // Random dual pairs across exponent families.
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto e = random_exponents(rng, 12, 1.0, 3.5);
    const auto x = random_vector(rng, 12, 1 + rng.below(6));
    const auto y = random_vector(rng, 12, 1 + rng.below(6));
    CHECK(holder_ratio(e, x, y) <= 2.0 + 1e-10);
  }

  CHECK_THROWS_AS(holder_ratio(e2, FiniteVector(), FiniteVector::unit(1)),
                  std::invalid_argument);
}

TEST_CASE("exponent sequence validation") {
  CHECK_THROWS_AS(ExponentSequence({0.5, 2.0}), std::invalid_argument);
  // Prefix must agree with a closed-form tail.
  CHECK_THROWS_AS(ExponentSequence({1.5}, ConstantTail{2.0}), std::invalid_argument);
  CHECK_NOTHROW(ExponentSequence({2.0, 2.0}, ConstantTail{2.0}));

  // Counts tails carry no per-index values.
  const ExponentSequence counts({}, CountsTail{CountFunction::exp_decay()});
  CHECK_THROWS_AS(counts.value(1), DescriptorError);

  // Oscillating pattern: period 2 alternates starting with p1.
  const ExponentSequence alt({}, OscillatingTail{1.0, 2.0, 2});
  CHECK(alt.value(1) == 1.0);
  CHECK(alt.value(2) == 2.0);
  CHECK(alt.value(127) == 1.0);
  CHECK(alt.value(128) == 2.0);
}

TEST_CASE("scale sequences") {
  const auto scales = ScaleSequence::exp_minus_n();
  CHECK(scales.value(3) == doctest::Approx(std::exp(-3.0)).epsilon(1e-14));
  const ScaleSequence prefix_only({0.5, 0.25});
  CHECK(prefix_only.value(2) == 0.25);
  CHECK_THROWS_AS(prefix_only.value(3), DescriptorError);
  CHECK_THROWS_AS(ScaleSequence({0.5, -0.1}), std::invalid_argument);
}
