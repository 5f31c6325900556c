#include "eraser/analysis/fringe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace eraser::analysis {

FringeHistogram fringe_histogram(std::span<const runner::TrialRecord> records,
                                 const models::TwoSlitModel& model) {
  const int n = model.grid().nbins;
  FringeHistogram hist;
  hist.bin_centers.resize(n);
  for (int b = 0; b < n; ++b) hist.bin_centers[b] = model.grid().center(b);
  hist.total.assign(n, 0);
  hist.plus.assign(n, 0);
  hist.minus.assign(n, 0);

  for (const auto& rec : records) {
    const qcore::Outcome* quanton = nullptr;
    const qcore::Outcome* wwd = nullptr;
    if (rec.outcomes.size() == 1) {
      quanton = &rec.outcomes[0];
    } else if (rec.order == runner::Order::kEager) {
      wwd = &rec.outcomes[0];
      quanton = &rec.outcomes[1];
    } else {
      quanton = &rec.outcomes[0];
      wwd = &rec.outcomes[1];
    }
    const int bin = quanton->index;
    if (bin < 0 || bin >= n) {
      throw std::invalid_argument("fringe_histogram: bin outside model grid");
    }
    hist.total[bin] += 1;
    if (wwd != nullptr && wwd->label == "plus") {
      hist.plus[bin] += 1;
      hist.has_split = true;
    } else if (wwd != nullptr && wwd->label == "minus") {
      hist.minus[bin] += 1;
      hist.has_split = true;
    }
  }
  return hist;
}

namespace {

struct HarmonicFit {
  double offset = 0.0;
  double amp = 0.0;
  double phase = 0.0;  // fitted profile: offset + amp*cos(theta - phase)
};

// Weighted least squares of u ~ a + b cos(theta) + c sin(theta).
HarmonicFit fit_harmonic(const std::vector<double>& theta,
                         const std::vector<double>& u,
                         const std::vector<double>& w) {
  double A[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  double rhs[3] = {0, 0, 0};
  for (size_t i = 0; i < u.size(); ++i) {
    const double base[3] = {1.0, std::cos(theta[i]), std::sin(theta[i])};
    for (int r = 0; r < 3; ++r) {
      rhs[r] += w[i] * base[r] * u[i];
      for (int c = 0; c < 3; ++c) A[r][c] += w[i] * base[r] * base[c];
    }
  }
  // Gaussian elimination with partial pivoting on the 3x3 system.
  int perm[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(A[perm[r]][col]) > std::abs(A[perm[pivot]][col])) pivot = r;
    }
    std::swap(perm[col], perm[pivot]);
    const double diag = A[perm[col]][col];
    if (std::abs(diag) < 1e-300) {
      return HarmonicFit{};  // degenerate window; report zero fringe
    }
    for (int r = col + 1; r < 3; ++r) {
      const double f = A[perm[r]][col] / diag;
      for (int c = col; c < 3; ++c) A[perm[r]][c] -= f * A[perm[col]][c];
      rhs[perm[r]] -= f * rhs[perm[col]];
    }
  }
  double x[3];
  for (int col = 2; col >= 0; --col) {
    double s = rhs[perm[col]];
    for (int c = col + 1; c < 3; ++c) s -= A[perm[col]][c] * x[c];
    x[col] = s / A[perm[col]][col];
  }
  HarmonicFit fit;
  fit.offset = x[0];
  fit.amp = std::hypot(x[1], x[2]);
  fit.phase = std::atan2(x[2], x[1]);
  return fit;
}

// Window bin whose center is closest to the lattice {anchor + m*period}.
int nearest_bin_to_lattice(const std::vector<int>& window,
                           const std::vector<double>& centers, double anchor,
                           double period) {
  int best = window.front();
  double best_d = std::numeric_limits<double>::infinity();
  for (int b : window) {
    const double t = (centers[b] - anchor) / period;
    const double d = std::abs(t - std::round(t)) * period;
    if (d < best_d) {
      best_d = d;
      best = b;
    }
  }
  return best;
}

VisibilityReport visibility_of(const std::vector<double>& values,
                               const models::TwoSlitModel& model) {
  const auto& grid = model.grid();
  if (static_cast<int>(values.size()) != grid.nbins) {
    throw std::invalid_argument("visibility: profile does not match grid");
  }
  double sum = 0.0;
  for (double v : values) {
    if (v < 0.0) throw std::invalid_argument("visibility: negative bin value");
    sum += v;
  }
  if (sum <= 0.0) throw EmptyHistogram("visibility: no counts in subset");

  const double period = model.fringe_period();
  const double window_halfwidth = model.envelope_width();
  const auto& env = model.envelope_mass();

  std::vector<int> window;
  std::vector<double> theta, u, w, centers(grid.nbins);
  for (int b = 0; b < grid.nbins; ++b) {
    centers[b] = grid.center(b);
    if (std::abs(centers[b]) > window_halfwidth) continue;
    window.push_back(b);
    theta.push_back(2.0 * std::numbers::pi * centers[b] / period);
    u.push_back(values[b] / env[b]);
    // Poisson-motivated weights: Var(count) ~ count, so Var(u) ~ v/env².
    w.push_back(env[b] * env[b] / std::max(values[b], 1.0));
  }
  if (window.size() < 4) {
    throw std::invalid_argument("visibility: window holds too few bins");
  }

  const HarmonicFit fit = fit_harmonic(theta, u, w);
  VisibilityReport report;
  if (fit.offset > 0.0) {
    report.visibility = std::clamp(fit.amp / fit.offset, 0.0, 1.0);
  }
  const double max_anchor = fit.phase * period / (2.0 * std::numbers::pi);
  report.max_bin = nearest_bin_to_lattice(window, centers, max_anchor, period);
  report.min_bin = nearest_bin_to_lattice(
      window, centers, max_anchor + 0.5 * period, period);
  return report;
}

}  // namespace

VisibilityReport visibility(const FringeHistogram& hist, FringeSubset subset,
                            const models::TwoSlitModel& model) {
  if (static_cast<int>(hist.total.size()) != model.grid().nbins) {
    throw std::invalid_argument("visibility: histogram does not match grid");
  }
  const std::vector<std::int64_t>* counts = &hist.total;
  if (subset == FringeSubset::kPlus || subset == FringeSubset::kMinus) {
    if (!hist.has_split) {
      throw std::invalid_argument(
          "visibility: histogram is not split by x outcome");
    }
    counts = subset == FringeSubset::kPlus ? &hist.plus : &hist.minus;
  }
  std::vector<double> values(counts->begin(), counts->end());
  return visibility_of(values, model);
}

VisibilityReport fringe_visibility(const std::vector<double>& bin_values,
                                   const models::TwoSlitModel& model) {
  return visibility_of(bin_values, model);
}

}  // namespace eraser::analysis
