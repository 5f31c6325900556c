// Command-line front end: configures a model and measurement schedule, runs
// analytic or Monte Carlo experiments, and writes CSV outputs.

#pragma once

#include <cstdint>
#include <string>

namespace eraser::cli {

struct RunConfig {
  std::string model;            // mzi | twoslit | spins
  std::string order = "delayed";    // eager | delayed
  std::string wwd_basis = "z";      // z | x | none
  bool wwd_enabled = true;
  std::string mode = "analytic";    // analytic | montecarlo
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  int bins = 201;
  double slit_separation = 1.0;
  double wavelength = 0.1;
  double screen_distance = 100.0;
  double envelope_width = 30.0;
  double eta = 1e-6;
  std::string out_dir = "out";
  bool predict = false;
};

// Parses flags, runs the experiment, writes outputs.
// Exit codes: 0 success, 1 runtime error, 2 usage error.
int run_command(int argc, const char* const* argv);

}  // namespace eraser::cli
