// Standard bases of a two-state subsystem: the path-revealing z basis
// {up, down} and the path-erasing x basis {plus, minus}.

#pragma once

#include <cmath>

#include "eraser/qcore/basis.hpp"

namespace eraser::models {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline qcore::MeasurementBasis z_basis(int target) {
  return qcore::MeasurementBasis::computational("z", target, {"up", "down"});
}

inline qcore::MeasurementBasis x_basis(int target) {
  // |plus> = (|up> + |down>)/sqrt2, |minus> = (|up> - |down>)/sqrt2
  return qcore::MeasurementBasis(
      "x", target, {"plus", "minus"},
      {qcore::Amplitude{kInvSqrt2, 0.0}, qcore::Amplitude{kInvSqrt2, 0.0},
       qcore::Amplitude{kInvSqrt2, 0.0}, qcore::Amplitude{-kInvSqrt2, 0.0}});
}

}  // namespace eraser::models
