// Numerical tolerances shared by every module. Centralized so tests and
// implementation agree on what "exact" means for this toolkit.

#pragma once

namespace eraser {

// Algebraic identities: norms, probability sums, unitarity, orthonormality.
inline constexpr double kAlgebraicTol = 1e-12;

// Slack on density-matrix eigenvalues (positive semidefinite up to roundoff).
inline constexpr double kEigenvalueTol = 1e-10;

// Below this, an outcome probability is a true zero (dark fringe), not
// floating-point dust; collapsing onto it is an error.
inline constexpr double kZeroProbability = 1e-14;

}  // namespace eraser
