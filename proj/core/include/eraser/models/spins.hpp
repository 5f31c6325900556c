// Maximally correlated spin pair: (|up,up> + |down,down>)/√2, which equals
// (|plus,plus> + |minus,minus>)/√2 in the x bases.

#pragma once

#include "eraser/qcore/state.hpp"

namespace eraser::models {

struct SpinPairModel {};

qcore::StateVector spin_pair_state();

}  // namespace eraser::models
