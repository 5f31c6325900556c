// Screen-position histograms and fringe visibility.
//
// Visibility is measured on envelope-corrected bin means inside the central
// window |x| <= envelope width, smoothed by a weighted least-squares
// projection onto the model's fringe harmonic {1, cos(2πx/P), sin(2πx/P)}.
// The reported value is (max - min)/(max + min) of the smoothed profile,
// i.e. fitted amplitude over fitted offset. The projection leaves a
// unit-visibility fringe untouched while averaging counting noise across the
// whole window, which a sliding-window smoother cannot do without also
// washing out the fringe.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eraser/models/twoslit.hpp"
#include "eraser/runner/runner.hpp"

namespace eraser::analysis {

class EmptyHistogram : public std::runtime_error {
 public:
  explicit EmptyHistogram(const std::string& what) : std::runtime_error(what) {}
};

struct FringeHistogram {
  std::vector<double> bin_centers;
  std::vector<std::int64_t> total;
  std::vector<std::int64_t> plus;   // filled when split by x outcomes
  std::vector<std::int64_t> minus;
  bool has_split = false;
};

// Bins a batch of two-slit records on the model grid, splitting by the
// which-way x outcome when one was measured.
FringeHistogram fringe_histogram(std::span<const runner::TrialRecord> records,
                                 const models::TwoSlitModel& model);

enum class FringeSubset { kAll, kPlus, kMinus };

struct VisibilityReport {
  double visibility = 0.0;  // in [0, 1]
  int max_bin = 0;          // grid index nearest a smoothed-profile maximum
  int min_bin = 0;          // grid index nearest a smoothed-profile minimum
};

// Visibility of one subset of the histogram. Throws EmptyHistogram when the
// subset holds no counts.
VisibilityReport visibility(const FringeHistogram& hist, FringeSubset subset,
                            const models::TwoSlitModel& model);

// Same estimator on an arbitrary per-bin profile (e.g. an analytic pdf).
VisibilityReport fringe_visibility(const std::vector<double>& bin_values,
                                   const models::TwoSlitModel& model);

}  // namespace eraser::analysis
