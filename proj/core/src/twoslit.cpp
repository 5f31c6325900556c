#include "eraser/models/twoslit.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eraser/qcore/errors.hpp"

namespace eraser::models {

using qcore::Amplitude;

namespace {

constexpr double kPi = std::numbers::pi;

// Integrates f over [a, b], splitting into panels no wider than a quarter
// fringe period so the oscillatory factor stays well inside Gauss-Legendre
// accuracy.
template <typename F>
double integrate(F&& f, double a, double b, double period) {
  const int panels =
      std::max(1, static_cast<int>(std::ceil((b - a) / (period / 4.0))));
  const double step = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    sum += boost::math::quadrature::gauss<double, 30>::integrate(
        f, a + p * step, a + (p + 1) * step);
  }
  return sum;
}

}  // namespace

ScreenGrid ScreenGrid::uniform(double lo, double hi, int nbins) {
  if (!(hi > lo) || nbins < 2) {
    throw std::invalid_argument("ScreenGrid: need hi > lo and nbins >= 2");
  }
  return ScreenGrid{lo, hi, nbins};
}

TwoSlitModel::TwoSlitModel(double slit_separation, double wavelength,
                           double screen_distance, double envelope_width,
                           ScreenGrid grid)
    : d_(slit_separation),
      lambda_(wavelength),
      dist_(screen_distance),
      width_(envelope_width),
      grid_(grid) {
  if (d_ <= 0.0 || lambda_ <= 0.0 || dist_ <= 0.0 || width_ <= 0.0) {
    throw std::invalid_argument("TwoSlitModel: geometry must be positive");
  }
  if (!(grid_.hi > grid_.lo) || grid_.nbins < 2) {
    throw std::invalid_argument("TwoSlitModel: bad screen grid");
  }
  const double period = fringe_period();
  if (grid_.hi - grid_.lo < 3.0 * period) {
    throw std::invalid_argument(
        "TwoSlitModel: grid must span at least 3 fringe periods");
  }

  envelope_mass_.resize(grid_.nbins);
  fringe_mass_.resize(grid_.nbins);
  const double k = 2.0 * kPi / period;
  for (int b = 0; b < grid_.nbins; ++b) {
    const double lo = grid_.lo_edge(b);
    const double hi = grid_.hi_edge(b);
    envelope_mass_[b] =
        integrate([this](double x) { return envelope_density(x); }, lo, hi,
                  period);
    fringe_mass_[b] = integrate(
        [this, k](double x) { return envelope_density(x) * std::cos(k * x); },
        lo, hi, period);
    grid_mass_ += envelope_mass_[b];
  }
}

TwoSlitModel TwoSlitModel::with_default_geometry(int nbins) {
  const double w = 30.0;
  return TwoSlitModel(1.0, 0.1, 100.0, w,
                      ScreenGrid::uniform(-3.0 * w, 3.0 * w, nbins));
}

double TwoSlitModel::envelope_density(double x) const {
  const double z = x / width_;
  return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * kPi) * width_);
}

double TwoSlitModel::line_fringe_integral() const {
  const double kw = 2.0 * kPi * width_ / fringe_period();
  return std::exp(-0.5 * kw * kw);
}

std::vector<double> twoslit_pdf(const TwoSlitModel& model,
                                FringeCondition condition) {
  const auto& env = model.envelope_mass();
  const auto& fringe = model.fringe_mass();
  const double mass = model.grid_mass();
  const int n = model.grid().nbins;

  std::vector<double> pdf(n);
  switch (condition) {
    case FringeCondition::kNone:
    case FringeCondition::kZUp:
    case FringeCondition::kZDown:
      // Conditioning on a z outcome selects one path; both paths share the
      // envelope, so these three densities coincide (no fringe term).
      for (int b = 0; b < n; ++b) pdf[b] = env[b] / mass;
      break;
    case FringeCondition::kXPlus: {
      const double norm = (1.0 + model.line_fringe_integral()) * mass;
      for (int b = 0; b < n; ++b) pdf[b] = (env[b] + fringe[b]) / norm;
      break;
    }
    case FringeCondition::kXMinus: {
      const double norm = (1.0 - model.line_fringe_integral()) * mass;
      for (int b = 0; b < n; ++b) pdf[b] = (env[b] - fringe[b]) / norm;
      break;
    }
  }
  return pdf;
}

double branch_probability(const TwoSlitModel& model,
                          FringeCondition condition) {
  switch (condition) {
    case FringeCondition::kNone:
      return 1.0;
    case FringeCondition::kZUp:
    case FringeCondition::kZDown:
      return 0.5;
    case FringeCondition::kXPlus:
      return 0.5 * (1.0 + model.line_fringe_integral());
    case FringeCondition::kXMinus:
      return 0.5 * (1.0 - model.line_fringe_integral());
  }
  throw std::logic_error("branch_probability: bad condition");
}

qcore::StateVector twoslit_state(const TwoSlitModel& model) {
  const auto& env = model.envelope_mass();
  const auto& fringe = model.fringe_mass();
  const double mass = model.grid_mass();
  const int n = model.grid().nbins;

  // Per bin: amplitudes r·e^{±iχ} on (bin, up) and (bin, down) with
  // cos 2χ = M/F, so the z marginals are F/2 each and the x outcomes split
  // the bin mass as (F ± M)/2, matching the quadrature tables.
  std::vector<Amplitude> amps(static_cast<size_t>(n) * 2);
  for (int b = 0; b < n; ++b) {
    const double r = std::sqrt(env[b] / (2.0 * mass));
    const double c = std::clamp(fringe[b] / env[b], -1.0, 1.0);
    const double chi = 0.5 * std::acos(c);
    amps[2 * b] = Amplitude{r * std::cos(chi), r * std::sin(chi)};
    amps[2 * b + 1] = Amplitude{r * std::cos(chi), -r * std::sin(chi)};
  }
  return qcore::StateVector::normalized(qcore::HilbertSpace({n, 2}),
                                        std::move(amps));
}

qcore::MeasurementBasis screen_bin_basis(const TwoSlitModel& model) {
  std::vector<std::string> labels(model.grid().nbins);
  for (int b = 0; b < model.grid().nbins; ++b) labels[b] = std::to_string(b);
  return qcore::MeasurementBasis::computational("screen", 0,
                                                std::move(labels));
}

}  // namespace eraser::models
