// Balanced Mach-Zehnder interferometer with an optional 1-bit which-way
// detector in the paths.
//
// Two equivalent phase conventions are supported. The raw convention keeps
// the -1 reflection phase at the first beam splitter and the matching raw
// second-splitter map; the redefined convention absorbs those phases into the
// path states so the state after the first splitter is (|path1>+|path2>)/√2
// and the second splitter acts as a Hadamard. Both yield identical detector
// statistics; the tests pin that down.

#pragma once

#include "eraser/qcore/measure.hpp"
#include "eraser/qcore/state.hpp"

namespace eraser::models {

enum class PhaseConvention { kRaw, kRedefined };

struct MziModel {
  PhaseConvention phase_convention = PhaseConvention::kRedefined;
  bool wwd_enabled = true;
};

// Quanton path state after the first beam splitter (dims [2]).
// Raw: (|T> - |R>)/√2. Redefined: (|path1> + |path2>)/√2.
qcore::StateVector mzi_state_after_bs1(const MziModel& model);

// Path-controlled flip with the detector prepared in |up>:
// |path1>|up> stays, |path2>|up> -> |path2>|down>. Input must be a
// quanton-only path state (dims [2]); output lives on dims [2, 2].
qcore::StateVector mzi_couple_wwd(const qcore::StateVector& path_state);

// Evolution through the mirrors and the second beam splitter, acting on the
// quanton subsystem only.
qcore::SubsystemUnitary mzi_bs2_unitary(PhaseConvention convention);

// Full pipeline: splitter, optional which-way coupling, second splitter.
// Without the detector the result is a bright fringe at D1 and a dark one at
// D2; with it, the entangled state whose detector-basis marginals are 1/2.
qcore::StateVector mzi_final_state(const MziModel& model);

// {D1, D2} on the quanton subsystem (the two output ports).
qcore::MeasurementBasis detector_basis();

}  // namespace eraser::models
