// Pure states on small tensor-product spaces, with the operations needed by
// the interferometer models: tensor products and single-subsystem unitaries.
// States are immutable; every operation returns a new value.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "eraser/qcore/hilbert.hpp"

namespace eraser::qcore {

class StateVector {
 public:
  // Requires amps already normalized within kAlgebraicTol and finite.
  StateVector(HilbertSpace space, std::vector<Amplitude> amps);

  // Normalizes amps (error if the norm is numerically zero).
  static StateVector normalized(HilbertSpace space,
                                std::vector<Amplitude> amps);

  static StateVector basis_state(HilbertSpace space, int flat_index);

  const HilbertSpace& space() const { return space_; }
  std::span<const Amplitude> amps() const { return amps_; }
  Amplitude amp(int flat_index) const { return amps_.at(flat_index); }
  int dim() const { return space_.total_dim(); }

  double norm() const;
  Amplitude inner(const StateVector& other) const;  // <this|other>

 private:
  HilbertSpace space_;
  std::vector<Amplitude> amps_;
};

// |a> ⊗ |b>: output dims are the concatenation of the input dims.
StateVector tensor(const StateVector& a, const StateVector& b);

// Unitary acting on one subsystem, identity elsewhere. The matrix is d×d
// row-major; U†U = I is checked on construction within kAlgebraicTol.
class SubsystemUnitary {
 public:
  SubsystemUnitary(int target, int dim, std::vector<Amplitude> matrix);

  int target() const { return target_; }
  int dim() const { return dim_; }
  Amplitude at(int row, int col) const { return m_[row * dim_ + col]; }

 private:
  int target_;
  int dim_;
  std::vector<Amplitude> m_;
};

StateVector apply_unitary(const StateVector& state, const SubsystemUnitary& u);

}  // namespace eraser::qcore
