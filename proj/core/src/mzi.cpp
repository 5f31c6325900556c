#include "eraser/models/mzi.hpp"

#include "eraser/models/bases.hpp"
#include "eraser/qcore/errors.hpp"

namespace eraser::models {

using qcore::Amplitude;
using qcore::HilbertSpace;
using qcore::StateVector;
using qcore::SubsystemUnitary;

StateVector mzi_state_after_bs1(const MziModel& model) {
  if (model.phase_convention == PhaseConvention::kRaw) {
    return StateVector(HilbertSpace({2}),
                       {Amplitude{kInvSqrt2, 0.0}, Amplitude{-kInvSqrt2, 0.0}});
  }
  return StateVector(HilbertSpace({2}),
                     {Amplitude{kInvSqrt2, 0.0}, Amplitude{kInvSqrt2, 0.0}});
}

StateVector mzi_couple_wwd(const qcore::StateVector& path_state) {
  if (path_state.space().subsystems() != 1 || path_state.space().dim(0) != 2) {
    throw qcore::DimensionMismatch(
        "mzi_couple_wwd: expected a quanton-only path state (dims [2])");
  }
  // amp layout on dims [2, 2]: (path, detector) row-major.
  std::vector<Amplitude> amps(4, Amplitude{0.0, 0.0});
  amps[0] = path_state.amp(0);  // path1, up
  amps[3] = path_state.amp(1);  // path2, down
  return StateVector(HilbertSpace({2, 2}), std::move(amps));
}

SubsystemUnitary mzi_bs2_unitary(PhaseConvention convention) {
  const double s = kInvSqrt2;
  if (convention == PhaseConvention::kRaw) {
    // |T> -> (-|D1> - |D2>)/√2,  |R> -> (|D1> - |D2>)/√2
    return SubsystemUnitary(0, 2,
                            {Amplitude{-s, 0.0}, Amplitude{s, 0.0},
                             Amplitude{-s, 0.0}, Amplitude{-s, 0.0}});
  }
  // |path1> -> (|D1> + |D2>)/√2,  |path2> -> (|D1> - |D2>)/√2
  return SubsystemUnitary(0, 2,
                          {Amplitude{s, 0.0}, Amplitude{s, 0.0},
                           Amplitude{s, 0.0}, Amplitude{-s, 0.0}});
}

StateVector mzi_final_state(const MziModel& model) {
  StateVector state = mzi_state_after_bs1(model);
  if (model.wwd_enabled) state = mzi_couple_wwd(state);
  return apply_unitary(state, mzi_bs2_unitary(model.phase_convention));
}

qcore::MeasurementBasis detector_basis() {
  return qcore::MeasurementBasis::computational("detector", 0, {"D1", "D2"});
}

}  // namespace eraser::models
