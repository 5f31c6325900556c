#include <cmath>
#include <doctest.h>
#include <random>

#include "eraser/models/bases.hpp"
#include "eraser/models/mzi.hpp"
#include "eraser/qcore/density.hpp"
#include "eraser/qcore/measure.hpp"
#include "eraser/tolerances.hpp"
#include "test_support.hpp"

using namespace eraser;
using qcore::Amplitude;
using qcore::HilbertSpace;
using qcore::MeasurementBasis;
using qcore::SplitMix64;
using qcore::StateVector;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

// (|path1,up> + |path2,down>)/√2 — the entangled quanton⊗detector state.
StateVector entangled_z() {
  return StateVector(HilbertSpace({2, 2}),
                     {Amplitude{kS, 0}, {}, {}, Amplitude{kS, 0}});
}

}  // namespace

TEST_CASE("entangled state has even z-marginals on the detector") {
  const auto probs = outcome_probabilities(entangled_z(), models::z_basis(1));
  CHECK(probs[0] == doctest::Approx(0.5).epsilon(kAlgebraicTol));
  CHECK(probs[1] == doctest::Approx(0.5).epsilon(kAlgebraicTol));
}

TEST_CASE("post-splitter entangled state has even detector marginals") {
  const auto state = models::mzi_final_state(models::MziModel{});
  const auto probs = outcome_probabilities(state, models::detector_basis());
  CHECK(probs[0] == doctest::Approx(0.5).epsilon(kAlgebraicTol));
  CHECK(probs[1] == doctest::Approx(0.5).epsilon(kAlgebraicTol));
}

TEST_CASE("product state gives a deterministic z outcome") {
  const auto state = StateVector::basis_state(HilbertSpace({2, 2}), 0);
  const auto probs = outcome_probabilities(state, models::z_basis(1));
  CHECK(probs[0] == doctest::Approx(1.0).epsilon(kAlgebraicTol));
  CHECK(probs[1] == doctest::Approx(0.0).epsilon(kAlgebraicTol));
}

TEST_CASE("property: outcome probabilities sum to 1") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const auto state = test::random_state(rng, {2, 3});
    const int target = static_cast<int>(rng() % 2);
    const auto basis = test::random_basis(rng, "b", target,
                                          target == 0 ? 2 : 3);
    const auto probs = outcome_probabilities(state, basis);
    double sum = 0.0;
    for (double p : probs) {
      CHECK(p >= -kAlgebraicTol);
      sum += p;
    }
    CHECK(std::abs(sum - 1.0) < kAlgebraicTol);
  }
}

TEST_CASE("registering the quanton leaves the detector in a both-ways state") {
  const auto state = models::mzi_final_state(models::MziModel{});
  const auto after_d1 = collapse(state, models::detector_basis(), 0);
  // Detector ends in (|up> + |down>)/√2 = |plus>.
  const auto x_probs = outcome_probabilities(after_d1, models::x_basis(1));
  CHECK(x_probs[0] == doctest::Approx(1.0).epsilon(kAlgebraicTol));
  CHECK(x_probs[1] == doctest::Approx(0.0).epsilon(kAlgebraicTol));
}

TEST_CASE("collapsing spin 1 up leaves spin 2 up") {
  const auto after = collapse(entangled_z(), models::z_basis(0), 0);
  const auto probs = outcome_probabilities(after, models::z_basis(1));
  CHECK(probs[0] == doctest::Approx(1.0).epsilon(kAlgebraicTol));
}

TEST_CASE("collapse onto a dark outcome throws") {
  // After the second splitter without a which-way detector the quanton is
  // entirely at D1; asking for D2 must fail.
  models::MziModel model;
  model.wwd_enabled = false;
  const auto state = models::mzi_final_state(model);
  CHECK_THROWS_AS(collapse(state, models::detector_basis(), 1),
                  qcore::ZeroProbabilityOutcome);
}

TEST_CASE("property: collapse is idempotent") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 30; ++rep) {
    const auto state = test::random_state(rng, {2, 2});
    const auto basis = test::random_basis(rng, "b", rng() % 2 ? 0 : 1, 2);
    const auto probs = outcome_probabilities(state, basis);
    const int j = probs[0] > probs[1] ? 0 : 1;  // pick the likelier outcome
    const auto once = collapse(state, basis, j);
    const auto twice = collapse(once, basis, j);
    for (int i = 0; i < state.dim(); ++i) {
      CHECK(std::abs(once.amp(i) - twice.amp(i)) < kAlgebraicTol);
    }
  }
}

TEST_CASE("sampling a deterministic outcome never surprises") {
  const auto state = StateVector::basis_state(HilbertSpace({2, 2}), 0);
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 1234567ULL}) {
    SplitMix64 rng(seed);
    const auto [outcome, collapsed] =
        sample_outcome(state, models::z_basis(1), rng);
    CHECK(outcome.label == "up");
    CHECK(outcome.index == 0);
  }
}

TEST_CASE("sampling the entangled detector marginal is unbiased") {
  const auto state = models::mzi_final_state(models::MziModel{});
  const auto det = models::detector_basis();
  SplitMix64 rng(2024);
  int d1 = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto [outcome, collapsed] = sample_outcome(state, det, rng);
    if (outcome.index == 0) ++d1;
  }
  CHECK(std::abs(static_cast<double>(d1) / n - 0.5) < 0.005);
}

TEST_CASE("detector clicks pair exactly with x outcomes") {
  const auto state = models::mzi_final_state(models::MziModel{});
  const auto det = models::detector_basis();
  const auto x = models::x_basis(1);
  SplitMix64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    auto [click, after_click] = sample_outcome(state, det, rng);
    auto [mark, ignored] = sample_outcome(after_click, x, rng);
    if (click.label == "D1") CHECK(mark.label == "plus");
    if (click.label == "D2") CHECK(mark.label == "minus");
  }
}

TEST_CASE("property: joint distribution is measurement-order independent") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 40; ++rep) {
    const auto state = test::random_state(rng, {2, 2});
    const auto a = test::random_basis(rng, "a", 0, 2);
    const auto b = test::random_basis(rng, "b", 1, 2);

    const auto pa = outcome_probabilities(state, a);
    const auto pb = outcome_probabilities(state, b);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        double ab = 0.0, ba = 0.0;
        if (pa[i] > kZeroProbability) {
          ab = pa[i] * outcome_probabilities(collapse(state, a, i), b)[j];
        }
        if (pb[j] > kZeroProbability) {
          ba = pb[j] * outcome_probabilities(collapse(state, b, j), a)[i];
        }
        CHECK(std::abs(ab - ba) < kAlgebraicTol);
      }
    }
  }
}

TEST_CASE("property: distributions match the reduced density diagonal") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 40; ++rep) {
    const auto state = test::random_state(rng, {2, 2});
    const int target = static_cast<int>(rng() % 2);
    const auto basis = test::random_basis(rng, "b", target, 2);
    const auto probs = outcome_probabilities(state, basis);
    const auto diag = reduced_density(state, target).diagonal_in(basis);
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(probs[j] - diag[j]) < kAlgebraicTol);
    }
  }
}
