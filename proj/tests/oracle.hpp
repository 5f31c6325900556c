// Independent numerical oracles for cross-checking the implementation:
//  - adaptive Simpson quadrature of the analytic screen densities, kept
//    deliberately separate from the Gauss-Legendre path inside the library;
//  - partial trace by explicit index summation for two-qubit states.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "eraser/models/twoslit.hpp"
#include "eraser/qcore/state.hpp"

namespace eraser::test {

inline double simpson(const std::function<double(double)>& f, double a,
                      double b, double fa, double fm, double fb, double tol,
                      int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
         simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

inline double integrate_oracle(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-14) {
  const double m = 0.5 * (a + b);
  return simpson(f, a, b, f(a), f(m), f(b), tol, 40);
}

struct TwoSlitOracle {
  double slit_separation;
  double wavelength;
  double screen_distance;
  double envelope_width;

  double period() const {
    return wavelength * screen_distance / slit_separation;
  }
  double envelope(double x) const {
    const double z = x / envelope_width;
    return std::exp(-0.5 * z * z) /
           (std::sqrt(2.0 * std::numbers::pi) * envelope_width);
  }
  // Joint screen density of the x=plus/minus branches (before conditioning).
  double joint_density(double x, int sign) const {
    const double k = 2.0 * std::numbers::pi / period();
    return 0.5 * envelope(x) * (1.0 + sign * std::cos(k * x));
  }

  double envelope_mass(double lo, double hi) const {
    return integrate_oracle([this](double x) { return envelope(x); }, lo, hi);
  }
  double joint_mass(double lo, double hi, int sign) const {
    return integrate_oracle(
        [this, sign](double x) { return joint_density(x, sign); }, lo, hi);
  }
};

// Reduced density of one subsystem of a state on dims [2, 2], written as the
// explicit two-index sums (row-major amplitude layout: index = 2*q + w).
inline std::vector<std::complex<double>> reduced_by_summation(
    const qcore::StateVector& state, int keep) {
  const auto a = state.amps();
  std::vector<std::complex<double>> rho(4, {0.0, 0.0});
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::complex<double> s{0.0, 0.0};
      for (int other = 0; other < 2; ++other) {
        const int idx_i = keep == 0 ? 2 * i + other : 2 * other + i;
        const int idx_j = keep == 0 ? 2 * j + other : 2 * other + j;
        s += a[idx_i] * std::conj(a[idx_j]);
      }
      rho[2 * i + j] = s;
    }
  }
  return rho;
}

}  // namespace eraser::test
