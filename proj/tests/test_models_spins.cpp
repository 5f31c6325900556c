#include <cmath>
#include <doctest.h>

#include "eraser/models/bases.hpp"
#include "eraser/models/spins.hpp"
#include "eraser/qcore/measure.hpp"
#include "eraser/tolerances.hpp"

using namespace eraser;
using qcore::Amplitude;
using qcore::SplitMix64;

TEST_CASE("spin pair amplitudes") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto state = models::spin_pair_state();
  CHECK(std::abs(state.amp(0) - Amplitude{s, 0}) < kAlgebraicTol);
  CHECK(std::abs(state.amp(3) - Amplitude{s, 0}) < kAlgebraicTol);
  CHECK(std::abs(state.amp(1)) < kAlgebraicTol);
  CHECK(std::abs(state.amp(2)) < kAlgebraicTol);
}

TEST_CASE("z outcomes always agree") {
  const auto state = models::spin_pair_state();
  SplitMix64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    auto [o1, collapsed] = sample_outcome(state, models::z_basis(0), rng);
    auto [o2, ignored] = sample_outcome(collapsed, models::z_basis(1), rng);
    CHECK(o1.label == o2.label);
  }
}

TEST_CASE("x outcomes always agree") {
  const auto state = models::spin_pair_state();
  SplitMix64 rng(6);
  for (int i = 0; i < 1000; ++i) {
    auto [o1, collapsed] = sample_outcome(state, models::x_basis(0), rng);
    auto [o2, ignored] = sample_outcome(collapsed, models::x_basis(1), rng);
    CHECK(o1.label == o2.label);
  }
}

TEST_CASE("z on one spin says nothing about x on the other") {
  const auto state = models::spin_pair_state();
  const auto after_down = collapse(state, models::z_basis(0), 1);
  const auto probs = outcome_probabilities(after_down, models::x_basis(1));
  CHECK(probs[0] == doctest::Approx(0.5).epsilon(kAlgebraicTol));
  CHECK(probs[1] == doctest::Approx(0.5).epsilon(kAlgebraicTol));
}

TEST_CASE("joint (z1, x2) distribution is uniform") {
  const auto state = models::spin_pair_state();
  const auto pz = outcome_probabilities(state, models::z_basis(0));
  for (int i = 0; i < 2; ++i) {
    const auto cond = collapse(state, models::z_basis(0), i);
    const auto px = outcome_probabilities(cond, models::x_basis(1));
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(pz[i] * px[j] - 0.25) < kAlgebraicTol);
    }
  }
}

TEST_CASE("the same state written in the x bases is again diagonal") {
  const auto state = models::spin_pair_state();
  // <plus,plus|state> = <minus,minus|state> = 1/sqrt2; cross terms vanish.
  const auto x0 = models::x_basis(0);
  const auto x1 = models::x_basis(1);
  for (int i = 0; i < 2; ++i) {
    const auto collapsed = collapse(state, x0, i);
    const auto probs = outcome_probabilities(collapsed, x1);
    CHECK(probs[i] == doctest::Approx(1.0).epsilon(kAlgebraicTol));
  }
  const auto px = outcome_probabilities(state, x0);
  CHECK(std::abs(px[0] - 0.5) < kAlgebraicTol);
  CHECK(std::abs(px[1] - 0.5) < kAlgebraicTol);
}
