// Single-quanton trials under an explicit measurement ordering.
//
// eager:   the which-way detector is read first, then the quanton registers;
// delayed: the quanton registers first, the detector is read afterwards.
//
// Every trial draws from its own counter-derived RNG stream, so a batch is a
// pure function of (setup, schedule, master seed) no matter how the trials
// are executed or assembled.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eraser/models/mzi.hpp"
#include "eraser/models/spins.hpp"
#include "eraser/models/twoslit.hpp"
#include "eraser/qcore/measure.hpp"

namespace eraser::runner {

enum class Order { kEager, kDelayed };
enum class WwdBasis { kZ, kX, kNone };
enum class QuantonBasis { kDetector, kScreen, kZ, kX };

std::string to_string(Order order);

struct MeasurementSchedule {
  Order order = Order::kDelayed;
  WwdBasis wwd_basis = WwdBasis::kZ;
  QuantonBasis quanton_basis = QuantonBasis::kDetector;
};

struct TrialRecord {
  std::int64_t trial_id = 0;
  Order order = Order::kDelayed;
  std::vector<qcore::Outcome> outcomes;  // in execution order (1 or 2)
  std::uint64_t seed_used = 0;
};

struct RngSpec {
  std::uint64_t master_seed = 0;
};

// Per-trial stream seed: a pure function of (master_seed, trial_id).
std::uint64_t trial_seed(const RngSpec& spec, std::int64_t trial_id);

// A prepared experiment: the final entangled state plus the bases the
// schedule will measure. Immutable and shareable across trials.
struct ExperimentSetup {
  qcore::StateVector state;
  qcore::MeasurementBasis quanton_basis;
  std::optional<qcore::MeasurementBasis> wwd_basis;
};

ExperimentSetup make_setup(const models::MziModel& model,
                           const MeasurementSchedule& schedule);
ExperimentSetup make_setup(const models::TwoSlitModel& model,
                           const MeasurementSchedule& schedule);
ExperimentSetup make_setup(const models::SpinPairModel& model,
                           const MeasurementSchedule& schedule);

TrialRecord run_trial(const ExperimentSetup& setup,
                      const MeasurementSchedule& schedule,
                      std::int64_t trial_id, const RngSpec& rng_spec);

std::vector<TrialRecord> run_batch(const ExperimentSetup& setup,
                                   const MeasurementSchedule& schedule,
                                   std::int64_t n_trials,
                                   const RngSpec& rng_spec);

// Convenience: build the setup from a model, then run the batch.
template <typename Model>
std::vector<TrialRecord> run_batch(const Model& model,
                                   const MeasurementSchedule& schedule,
                                   std::int64_t n_trials,
                                   const RngSpec& rng_spec) {
  return run_batch(make_setup(model, schedule), schedule, n_trials, rng_spec);
}

template <typename Model>
TrialRecord run_trial(const Model& model, const MeasurementSchedule& schedule,
                      std::int64_t trial_id, const RngSpec& rng_spec) {
  return run_trial(make_setup(model, schedule), schedule, trial_id, rng_spec);
}

}  // namespace eraser::runner
