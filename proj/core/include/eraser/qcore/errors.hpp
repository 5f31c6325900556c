#pragma once

#include <stdexcept>
#include <string>

namespace eraser::qcore {

// Attempt to collapse onto an outcome whose Born probability is zero
// (e.g. the dark output port of a balanced interferometer).
class ZeroProbabilityOutcome : public std::runtime_error {
 public:
  explicit ZeroProbabilityOutcome(const std::string& what)
      : std::runtime_error(what) {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace eraser::qcore
