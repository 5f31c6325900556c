// Predicting the which-way detector's x-basis outcome from where the quanton
// was registered, before the detector itself is measured.
//
// In the Mach-Zehnder case the mapping is exact: a D1 click fixes the
// detector in |plus>, a D2 click in |minus>. On the two-slit screen a bin
// predicts an x outcome only where the opposite fringe is negligible: at the
// maxima of one conditioned pattern the other pattern has a zero.

#pragma once

#include <stdexcept>
#include <string>

#include "eraser/models/twoslit.hpp"

namespace eraser::models {

class UnknownDetectorLabel : public std::invalid_argument {
 public:
  explicit UnknownDetectorLabel(const std::string& what)
      : std::invalid_argument(what) {}
};

class BinOutOfRange : public std::out_of_range {
 public:
  explicit BinOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct PredictionRule {
  // Dominance threshold: a bin is definite when the suppressed branch's
  // density, at the bin's most favorable position, is below eta times the
  // dominant one. Far below bin-integration leakage by design, so it only
  // tolerates floating-point dust around the analytic zeros.
  double eta = 1e-6;
};

enum class XPrediction { kPlus, kMinus, kUndetermined };

std::string to_string(XPrediction p);

// "D1" -> "plus", "D2" -> "minus"; anything else throws UnknownDetectorLabel.
std::string predict_x_state_from_click(const std::string& detector_label);

// Definite prediction for a screen bin, or undetermined. A bin predicts plus
// when it contains a position where the minus-conditioned density is
// eta-negligible relative to the plus-conditioned one (i.e. the bin straddles
// a plus fringe maximum), and symmetrically for minus.
XPrediction predict_x_state_from_position(const TwoSlitModel& model,
                                          const PredictionRule& rule, int bin);

}  // namespace eraser::models
