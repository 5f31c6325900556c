#include "eraser/models/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eraser::models {

namespace {

// Distance from the interval [lo, hi] to the nearest point of the lattice
// {offset + m*period : m integer}; 0 if the interval contains one.
double lattice_distance(double lo, double hi, double period, double offset) {
  const double m0 = std::floor((lo - offset) / period);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 2; ++i) {
    const double x = offset + (m0 + i) * period;
    const double d = std::max({0.0, lo - x, x - hi});
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

std::string to_string(XPrediction p) {
  switch (p) {
    case XPrediction::kPlus:
      return "plus";
    case XPrediction::kMinus:
      return "minus";
    case XPrediction::kUndetermined:
      return "undetermined";
  }
  return "undetermined";
}

std::string predict_x_state_from_click(const std::string& detector_label) {
  if (detector_label == "D1") return "plus";
  if (detector_label == "D2") return "minus";
  throw UnknownDetectorLabel("predict_x_state_from_click: unknown label '" +
                             detector_label + "'");
}

XPrediction predict_x_state_from_position(const TwoSlitModel& model,
                                          const PredictionRule& rule,
                                          int bin) {
  if (!(rule.eta > 0.0 && rule.eta < 1.0)) {
    throw std::invalid_argument("PredictionRule: eta must be in (0, 1)");
  }
  if (bin < 0 || bin >= model.grid().nbins) {
    throw BinOutOfRange("predict_x_state_from_position: bin out of range");
  }

  const double period = model.fringe_period();
  const double lo = model.grid().lo_edge(bin);
  const double hi = model.grid().hi_edge(bin);

  // f_minus/f_plus = tan²(πx/P) near a plus maximum, so the smallest ratio
  // the bin can reach is set by its distance to the nearest maximum.
  const double dist_plus = lattice_distance(lo, hi, period, 0.0);
  const double dist_minus = lattice_distance(lo, hi, period, 0.5 * period);
  const auto min_ratio = [period](double dist) {
    const double t = std::tan(std::numbers::pi * dist / period);
    return t * t;
  };

  const bool plus = min_ratio(dist_plus) < rule.eta;
  const bool minus = min_ratio(dist_minus) < rule.eta;
  if (plus && !minus) return XPrediction::kPlus;
  if (minus && !plus) return XPrediction::kMinus;
  return XPrediction::kUndetermined;
}

}  // namespace eraser::models
