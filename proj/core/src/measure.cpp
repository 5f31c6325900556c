#include "eraser/qcore/measure.hpp"

#include <cmath>
#include <stdexcept>

#include "eraser/qcore/errors.hpp"
#include "eraser/tolerances.hpp"

namespace eraser::qcore {

namespace {

void check_target(const StateVector& state, const MeasurementBasis& basis) {
  const HilbertSpace& space = state.space();
  if (basis.target() < 0 || basis.target() >= space.subsystems()) {
    throw DimensionMismatch("measure: bad target subsystem");
  }
  if (space.dim(basis.target()) != basis.dim()) {
    throw DimensionMismatch("measure: basis dim mismatch");
  }
}

}  // namespace

std::vector<double> outcome_probabilities(const StateVector& state,
                                          const MeasurementBasis& basis) {
  check_target(state, basis);
  const HilbertSpace& space = state.space();
  const int d = basis.dim();
  const int stride = space.stride(basis.target());
  const int block = d * stride;
  const int total = space.total_dim();
  const auto amps = state.amps();

  std::vector<double> probs(d, 0.0);
  if (basis.is_computational()) {
    for (int base = 0; base < total; base += block) {
      for (int off = 0; off < stride; ++off) {
        for (int j = 0; j < d; ++j) {
          probs[j] += std::norm(amps[base + off + j * stride]);
        }
      }
    }
    return probs;
  }

  for (int j = 0; j < d; ++j) {
    const auto v = basis.vector(j);
    double p = 0.0;
    for (int base = 0; base < total; base += block) {
      for (int off = 0; off < stride; ++off) {
        Amplitude proj{0.0, 0.0};
        for (int i = 0; i < d; ++i) {
          proj += std::conj(v[i]) * amps[base + off + i * stride];
        }
        p += std::norm(proj);
      }
    }
    probs[j] = p;
  }
  return probs;
}

std::vector<std::pair<std::string, double>> outcome_distribution(
    const StateVector& state, const MeasurementBasis& basis) {
  const std::vector<double> probs = outcome_probabilities(state, basis);
  std::vector<std::pair<std::string, double>> out;
  out.reserve(probs.size());
  for (size_t j = 0; j < probs.size(); ++j) {
    out.emplace_back(basis.label(static_cast<int>(j)), probs[j]);
  }
  return out;
}

StateVector collapse(const StateVector& state, const MeasurementBasis& basis,
                     int outcome_index) {
  check_target(state, basis);
  const HilbertSpace& space = state.space();
  const int d = basis.dim();
  if (outcome_index < 0 || outcome_index >= d) {
    throw DimensionMismatch("collapse: outcome index out of range");
  }
  const int stride = space.stride(basis.target());
  const int block = d * stride;
  const int total = space.total_dim();
  const auto amps = state.amps();

  std::vector<Amplitude> out(total, Amplitude{0.0, 0.0});
  double p = 0.0;

  if (basis.is_computational()) {
    for (int base = 0; base < total; base += block) {
      for (int off = 0; off < stride; ++off) {
        const int idx = base + off + outcome_index * stride;
        out[idx] = amps[idx];
        p += std::norm(amps[idx]);
      }
    }
  } else {
    const auto v = basis.vector(outcome_index);
    for (int base = 0; base < total; base += block) {
      for (int off = 0; off < stride; ++off) {
        Amplitude proj{0.0, 0.0};
        for (int i = 0; i < d; ++i) {
          proj += std::conj(v[i]) * amps[base + off + i * stride];
        }
        p += std::norm(proj);
        for (int i = 0; i < d; ++i) {
          out[base + off + i * stride] = v[i] * proj;
        }
      }
    }
  }

  if (p <= kZeroProbability) {
    throw ZeroProbabilityOutcome("collapse: outcome '" +
                                 basis.label(outcome_index) +
                                 "' has zero probability");
  }
  const double inv = 1.0 / std::sqrt(p);
  for (Amplitude& a : out) a *= inv;
  return StateVector(space, std::move(out));
}

std::pair<Outcome, StateVector> sample_outcome(const StateVector& state,
                                               const MeasurementBasis& basis,
                                               SplitMix64& rng) {
  const std::vector<double> probs = outcome_probabilities(state, basis);
  const double u = rng.uniform();

  int picked = -1;
  double cum = 0.0;
  for (size_t j = 0; j < probs.size(); ++j) {
    if (probs[j] <= 0.0) continue;  // never draw a dark outcome
    cum += probs[j];
    if (u < cum) {
      picked = static_cast<int>(j);
      break;
    }
  }
  if (picked < 0) {
    // u fell into the roundoff gap at the top of the cumulative sum;
    // take the last outcome with nonzero probability.
    for (int j = static_cast<int>(probs.size()) - 1; j >= 0; --j) {
      if (probs[j] > 0.0) {
        picked = j;
        break;
      }
    }
  }
  if (picked < 0) {
    throw ZeroProbabilityOutcome("sample_outcome: all outcomes have zero probability");
  }

  Outcome outcome{basis.name(), picked, basis.label(picked)};
  return {std::move(outcome), collapse(state, basis, picked)};
}

}  // namespace eraser::qcore
