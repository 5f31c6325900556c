#include <cmath>
#include <doctest.h>
#include <random>

#include "eraser/qcore/state.hpp"
#include "eraser/tolerances.hpp"
#include "test_support.hpp"

using namespace eraser;
using qcore::Amplitude;
using qcore::HilbertSpace;
using qcore::StateVector;
using qcore::SubsystemUnitary;

namespace {
const double kS = 1.0 / std::sqrt(2.0);
}

TEST_CASE("tensor of basis states is a basis state") {
  const auto e0 = StateVector::basis_state(HilbertSpace({2}), 0);
  const auto out = tensor(e0, e0);
  CHECK(out.space().dims() == std::vector<int>{2, 2});
  CHECK(out.amp(0) == Amplitude{1.0, 0.0});
  for (int i = 1; i < 4; ++i) CHECK(out.amp(i) == Amplitude{0.0, 0.0});
}

TEST_CASE("tensor distributes over superpositions") {
  const StateVector plus(HilbertSpace({2}), {Amplitude{kS, 0}, Amplitude{kS, 0}});
  const auto e0 = StateVector::basis_state(HilbertSpace({2}), 0);
  const auto out = tensor(plus, e0);
  CHECK(std::abs(out.amp(0) - Amplitude{kS, 0}) < kAlgebraicTol);
  CHECK(std::abs(out.amp(2) - Amplitude{kS, 0}) < kAlgebraicTol);
  CHECK(std::abs(out.amp(1)) < kAlgebraicTol);
  CHECK(std::abs(out.amp(3)) < kAlgebraicTol);
}

TEST_CASE("tensor row-major layout puts path2⊗down at flat index 3") {
  const auto path2 = StateVector::basis_state(HilbertSpace({2}), 1);
  const auto down = StateVector::basis_state(HilbertSpace({2}), 1);
  const auto out = tensor(path2, down);
  CHECK(out.amp(3) == Amplitude{1.0, 0.0});
}

TEST_CASE("identity unitary leaves any state unchanged") {
  std::mt19937_64 rng(31);
  const auto state = test::random_state(rng, {2, 3});
  const SubsystemUnitary id(1, 3,
                            {Amplitude{1, 0}, {}, {}, {}, Amplitude{1, 0}, {},
                             {}, {}, Amplitude{1, 0}});
  const auto out = apply_unitary(state, id);
  for (int i = 0; i < state.dim(); ++i) {
    CHECK(std::abs(out.amp(i) - state.amp(i)) < kAlgebraicTol);
  }
}

TEST_CASE("hadamard on subsystem 0 mixes, leaves subsystem 1 alone") {
  const SubsystemUnitary h(0, 2,
                           {Amplitude{kS, 0}, Amplitude{kS, 0},
                            Amplitude{kS, 0}, Amplitude{-kS, 0}});
  const auto e10 = StateVector::basis_state(HilbertSpace({2, 2}), 2);
  const auto out = apply_unitary(e10, h);
  CHECK(std::abs(out.amp(0) - Amplitude{kS, 0}) < kAlgebraicTol);
  CHECK(std::abs(out.amp(2) - Amplitude{-kS, 0}) < kAlgebraicTol);
  CHECK(std::abs(out.amp(1)) < kAlgebraicTol);
  CHECK(std::abs(out.amp(3)) < kAlgebraicTol);
}

TEST_CASE("property: unitaries preserve the norm") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const std::vector<int> dims = rep % 2 == 0 ? std::vector<int>{2, 2}
                                               : std::vector<int>{3, 2};
    const auto state = test::random_state(rng, dims);
    const int target = static_cast<int>(rng() % 2);
    const auto u = test::random_unitary(rng, target, dims[target]);
    CHECK(std::abs(apply_unitary(state, u).norm() - 1.0) < kAlgebraicTol);
  }
}

TEST_CASE("non-unitary matrix is rejected") {
  CHECK_THROWS_AS(SubsystemUnitary(0, 2,
                                   {Amplitude{1, 0}, Amplitude{1, 0},
                                    Amplitude{0, 0}, Amplitude{1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("state construction enforces normalization and finiteness") {
  CHECK_THROWS_AS(StateVector(HilbertSpace({2}),
                              {Amplitude{1.0, 0.0}, Amplitude{1.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      StateVector(HilbertSpace({2}),
                  {Amplitude{std::nan(""), 0.0}, Amplitude{0.0, 0.0}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      StateVector::normalized(HilbertSpace({2}),
                              {Amplitude{0.0, 0.0}, Amplitude{0.0, 0.0}}),
      std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis_state(HilbertSpace({2, 2}), 4),
                  qcore::DimensionMismatch);
}

TEST_CASE("apply_unitary rejects dimension mismatches") {
  std::mt19937_64 rng(5);
  const auto state = test::random_state(rng, {2, 2});
  const auto u3 = test::random_unitary(rng, 1, 3);
  CHECK_THROWS_AS(apply_unitary(state, u3), qcore::DimensionMismatch);
  const auto bad_target = test::random_unitary(rng, 2, 2);
  CHECK_THROWS_AS(apply_unitary(state, bad_target), qcore::DimensionMismatch);
}

TEST_CASE("inner product is conjugate-linear in the bra") {
  const StateVector a(HilbertSpace({2}), {Amplitude{0, 1}, Amplitude{0, 0}});
  const StateVector b(HilbertSpace({2}), {Amplitude{1, 0}, Amplitude{0, 0}});
  CHECK(std::abs(a.inner(b) - Amplitude{0, -1}) < kAlgebraicTol);
  CHECK(std::abs(a.inner(a) - Amplitude{1, 0}) < kAlgebraicTol);
}
