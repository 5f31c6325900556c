#include "eraser/models/spins.hpp"

#include "eraser/models/bases.hpp"

namespace eraser::models {

qcore::StateVector spin_pair_state() {
  using qcore::Amplitude;
  return qcore::StateVector(
      qcore::HilbertSpace({2, 2}),
      {Amplitude{kInvSqrt2, 0.0}, Amplitude{0.0, 0.0}, Amplitude{0.0, 0.0},
       Amplitude{kInvSqrt2, 0.0}});
}

}  // namespace eraser::models
