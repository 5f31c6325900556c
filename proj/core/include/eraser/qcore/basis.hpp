// Labeled orthonormal measurement bases on a single subsystem.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "eraser/qcore/hilbert.hpp"

namespace eraser::qcore {

class MeasurementBasis {
 public:
  // vectors: d orthonormal d-vectors, row-major (row j = basis vector j).
  // Orthonormality is checked within kAlgebraicTol.
  MeasurementBasis(std::string name, int target,
                   std::vector<std::string> labels,
                   std::vector<Amplitude> vectors);

  // Computational basis (identity vectors); measurement code takes an O(d)
  // fast path for it, which matters for bin-count-sized screen bases.
  static MeasurementBasis computational(std::string name, int target,
                                        std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  int target() const { return target_; }
  int dim() const { return dim_; }
  const std::string& label(int j) const { return labels_.at(j); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_computational() const { return computational_; }

  // Basis vector j (length dim()).
  std::span<const Amplitude> vector(int j) const;

 private:
  MeasurementBasis() = default;

  std::string name_;
  int target_ = 0;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Amplitude> vectors_;
  bool computational_ = false;
};

struct Outcome {
  std::string basis;  // name of the measured basis
  int index = 0;      // outcome index within the basis
  std::string label;  // outcome label, e.g. "up", "D1", a bin index
};

}  // namespace eraser::qcore
