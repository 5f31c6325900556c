#include "eraser/runner/runner.hpp"

#include <stdexcept>

#include "eraser/models/bases.hpp"

namespace eraser::runner {

using qcore::MeasurementBasis;
using qcore::SplitMix64;
using qcore::StateVector;

std::string to_string(Order order) {
  return order == Order::kEager ? "eager" : "delayed";
}

std::uint64_t trial_seed(const RngSpec& spec, std::int64_t trial_id) {
  SplitMix64 mixer(spec.master_seed +
                   (static_cast<std::uint64_t>(trial_id) + 1) *
                       0x9E3779B97F4A7C15ULL);
  return mixer.next();
}

namespace {

std::optional<MeasurementBasis> wwd_basis_for(const MeasurementSchedule& s,
                                              int target) {
  switch (s.wwd_basis) {
    case WwdBasis::kZ:
      return models::z_basis(target);
    case WwdBasis::kX:
      return models::x_basis(target);
    case WwdBasis::kNone:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

ExperimentSetup make_setup(const models::MziModel& model,
                           const MeasurementSchedule& schedule) {
  if (schedule.quanton_basis != QuantonBasis::kDetector) {
    throw std::invalid_argument("make_setup: MZI quanton basis is 'detector'");
  }
  if (!model.wwd_enabled && schedule.wwd_basis != WwdBasis::kNone) {
    throw std::invalid_argument(
        "make_setup: which-way detector disabled but schedule measures it");
  }
  // wwd_enabled with wwd_basis none is allowed: the detector entangles with
  // the path but is never read, which is how unconditional counts are taken.
  return ExperimentSetup{models::mzi_final_state(model),
                         models::detector_basis(),
                         wwd_basis_for(schedule, 1)};
}

ExperimentSetup make_setup(const models::TwoSlitModel& model,
                           const MeasurementSchedule& schedule) {
  if (schedule.quanton_basis != QuantonBasis::kScreen) {
    throw std::invalid_argument("make_setup: two-slit quanton basis is 'screen'");
  }
  return ExperimentSetup{models::twoslit_state(model),
                         models::screen_bin_basis(model),
                         wwd_basis_for(schedule, 1)};
}

ExperimentSetup make_setup(const models::SpinPairModel&,
                           const MeasurementSchedule& schedule) {
  MeasurementBasis spin1 = schedule.quanton_basis == QuantonBasis::kX
                               ? models::x_basis(0)
                               : models::z_basis(0);
  if (schedule.quanton_basis == QuantonBasis::kDetector ||
      schedule.quanton_basis == QuantonBasis::kScreen) {
    throw std::invalid_argument("make_setup: spin pair uses z or x bases");
  }
  return ExperimentSetup{models::spin_pair_state(), std::move(spin1),
                         wwd_basis_for(schedule, 1)};
}

TrialRecord run_trial(const ExperimentSetup& setup,
                      const MeasurementSchedule& schedule,
                      std::int64_t trial_id, const RngSpec& rng_spec) {
  const std::uint64_t seed = trial_seed(rng_spec, trial_id);
  SplitMix64 rng(seed);

  TrialRecord record;
  record.trial_id = trial_id;
  record.order = schedule.order;
  record.seed_used = seed;

  // Fresh copy of the prepared state; measurements collapse it in sequence.
  StateVector state = setup.state;

  const bool wwd_first =
      setup.wwd_basis.has_value() && schedule.order == Order::kEager;
  if (wwd_first) {
    auto [outcome, collapsed] = sample_outcome(state, *setup.wwd_basis, rng);
    record.outcomes.push_back(std::move(outcome));
    state = std::move(collapsed);
  }

  auto [q_outcome, q_collapsed] =
      sample_outcome(state, setup.quanton_basis, rng);
  record.outcomes.push_back(std::move(q_outcome));
  state = std::move(q_collapsed);

  if (setup.wwd_basis.has_value() && schedule.order == Order::kDelayed) {
    auto [outcome, collapsed] = sample_outcome(state, *setup.wwd_basis, rng);
    record.outcomes.push_back(std::move(outcome));
    state = std::move(collapsed);
  }
  return record;
}

std::vector<TrialRecord> run_batch(const ExperimentSetup& setup,
                                   const MeasurementSchedule& schedule,
                                   std::int64_t n_trials,
                                   const RngSpec& rng_spec) {
  if (n_trials < 0) {
    throw std::invalid_argument("run_batch: n_trials must be >= 0");
  }
  std::vector<TrialRecord> records;
  records.reserve(static_cast<size_t>(n_trials));
  for (std::int64_t t = 0; t < n_trials; ++t) {
    records.push_back(run_trial(setup, schedule, t, rng_spec));
  }
  return records;
}

}  // namespace eraser::runner
