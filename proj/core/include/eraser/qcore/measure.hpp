// Born-rule probabilities, projective collapse, and seeded sampling.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eraser/qcore/basis.hpp"
#include "eraser/qcore/rng.hpp"
#include "eraser/qcore/state.hpp"

namespace eraser::qcore {

// Born probabilities for each basis outcome, index-aligned with the basis.
// They sum to 1 within kAlgebraicTol.
std::vector<double> outcome_probabilities(const StateVector& state,
                                          const MeasurementBasis& basis);

// Labeled view of outcome_probabilities.
std::vector<std::pair<std::string, double>> outcome_distribution(
    const StateVector& state, const MeasurementBasis& basis);

// Renormalized projection onto the given outcome. Throws
// ZeroProbabilityOutcome if the outcome probability is <= kZeroProbability.
StateVector collapse(const StateVector& state, const MeasurementBasis& basis,
                     int outcome_index);

// Draws an outcome with Born probabilities and returns it together with the
// collapsed state. Deterministic given the rng state; outcomes with zero
// probability are never drawn.
std::pair<Outcome, StateVector> sample_outcome(const StateVector& state,
                                               const MeasurementBasis& basis,
                                               SplitMix64& rng);

}  // namespace eraser::qcore
