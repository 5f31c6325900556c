// Reduced density matrices by partial trace. This is the state-level oracle
// used to cross-check measurement distributions and no-information claims.

#pragma once

#include <vector>

#include "eraser/qcore/basis.hpp"
#include "eraser/qcore/state.hpp"

namespace eraser::qcore {

class DensityMatrix {
 public:
  // elements: dim×dim row-major. Hermiticity and unit trace are checked
  // within kAlgebraicTol on construction.
  DensityMatrix(int dim, std::vector<Amplitude> elements);

  int dim() const { return dim_; }
  Amplitude at(int row, int col) const { return m_[row * dim_ + col]; }

  double trace_real() const;
  double max_hermiticity_defect() const;

  // Smallest eigenvalue; must be >= -kEigenvalueTol for a physical state.
  double min_eigenvalue() const;

  // Checks all type invariants (trace, hermiticity, positivity); throws
  // std::runtime_error on violation.
  void validate() const;

  // <v_j|rho|v_j> for each basis vector; equals the Born distribution of the
  // corresponding subsystem measurement.
  std::vector<double> diagonal_in(const MeasurementBasis& basis) const;

 private:
  int dim_;
  std::vector<Amplitude> m_;
};

// Partial trace over all subsystems except `subsystem`.
DensityMatrix reduced_density(const StateVector& state, int subsystem);

}  // namespace eraser::qcore
