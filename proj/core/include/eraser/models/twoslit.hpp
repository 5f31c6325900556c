// Far-field two-slit model with a 1-bit which-way detector.
//
// Screen wavefunctions share a Gaussian envelope: the intensity envelope is a
// normal density with sigma = envelope width w, and the two paths carry
// opposite phases ±π d x/(λL), so the fringe factors conditioned on the
// detector x basis are 1 ± cos(2π d x /(λL)) with period P = λL/d.
//
// The continuous screen is handled through bin-integrated probabilities on a
// uniform grid: per bin k the model tabulates the envelope mass
// F_k = ∫_bin G² and the fringe mass M_k = ∫_bin G² cos(2πx/P), from which
// every distribution in scope follows. twoslit_state() packs the same masses
// into a pure state on dims [nbins, 2] that reproduces the bin-integrated
// joint distributions for the detector z and x bases exactly (within-bin
// decoherence makes intermediate detector bases mixed, so they are not
// representable this way and are not offered).

#pragma once

#include <string>
#include <vector>

#include "eraser/qcore/basis.hpp"
#include "eraser/qcore/state.hpp"

namespace eraser::models {

struct ScreenGrid {
  double lo = 0.0;
  double hi = 0.0;
  int nbins = 0;

  static ScreenGrid uniform(double lo, double hi, int nbins);

  double bin_width() const { return (hi - lo) / nbins; }
  double lo_edge(int k) const { return lo + k * bin_width(); }
  double hi_edge(int k) const { return lo + (k + 1) * bin_width(); }
  double center(int k) const { return lo + (k + 0.5) * bin_width(); }
};

class TwoSlitModel {
 public:
  TwoSlitModel(double slit_separation, double wavelength,
               double screen_distance, double envelope_width, ScreenGrid grid);

  // Default geometry: d=1, λ=0.1, L=100, w=30 (fringe period 10) with
  // `nbins` bins spanning ±3 envelope widths.
  static TwoSlitModel with_default_geometry(int nbins = 201);

  double slit_separation() const { return d_; }
  double wavelength() const { return lambda_; }
  double screen_distance() const { return dist_; }
  double envelope_width() const { return width_; }
  const ScreenGrid& grid() const { return grid_; }

  double fringe_period() const { return lambda_ * dist_ / d_; }

  // Intensity envelope G²(x): normal density with sigma = envelope width.
  double envelope_density(double x) const;

  // Bin mass tables (Gauss-Legendre quadrature of the analytic densities).
  const std::vector<double>& envelope_mass() const { return envelope_mass_; }
  const std::vector<double>& fringe_mass() const { return fringe_mass_; }
  double grid_mass() const { return grid_mass_; }

  // ∫_R G² cos(2πx/P) dx = exp(-2π²w²/P²); the imbalance between the two
  // x-branch weights. Zero to double precision for the default geometry.
  double line_fringe_integral() const;

 private:
  double d_, lambda_, dist_, width_;
  ScreenGrid grid_;
  std::vector<double> envelope_mass_;
  std::vector<double> fringe_mass_;
  double grid_mass_ = 0.0;
};

enum class FringeCondition { kNone, kZUp, kZDown, kXPlus, kXMinus };

// Per-bin probabilities of the analytic screen density under the condition.
// All vectors share one normalization (the unconditional on-grid mass), so
// P(+)·pdf(x_plus) + P(−)·pdf(x_minus) = pdf(none) holds bin by bin to
// machine precision; the unconditional vector sums to exactly 1 and the
// conditional vectors sum to their on-grid share (≈1).
std::vector<double> twoslit_pdf(const TwoSlitModel& model,
                                FringeCondition condition);

// P(condition): 1 for none, 1/2 for z branches, (1 ± line integral)/2 for
// the x branches.
double branch_probability(const TwoSlitModel& model, FringeCondition condition);

// Entangled quanton⊗detector state on dims [nbins, 2] (see file comment).
qcore::StateVector twoslit_state(const TwoSlitModel& model);

// Screen-bin basis on the quanton subsystem; labels are bin indices.
qcore::MeasurementBasis screen_bin_basis(const TwoSlitModel& model);

}  // namespace eraser::models
