// Finite tensor-product Hilbert spaces over a fixed subsystem ordering.
//
// Convention used throughout the toolkit: subsystem 0 is the quanton
// (interferometer path / screen position), subsystem 1 is the 1-bit
// which-way detector. Amplitude arrays are flat and row-major in this
// subsystem order.

#pragma once

#include <complex>
#include <vector>

#include "eraser/qcore/errors.hpp"

namespace eraser::qcore {

using Amplitude = std::complex<double>;

class HilbertSpace {
 public:
  explicit HilbertSpace(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw DimensionMismatch("HilbertSpace: no subsystems");
    for (int d : dims_) {
      if (d < 2) throw DimensionMismatch("HilbertSpace: subsystem dim < 2");
    }
    strides_.assign(dims_.size(), 1);
    for (int k = static_cast<int>(dims_.size()) - 2; k >= 0; --k) {
      strides_[k] = strides_[k + 1] * dims_[k + 1];
    }
    total_ = strides_[0] * dims_[0];
  }

  int subsystems() const { return static_cast<int>(dims_.size()); }
  int dim(int k) const { return dims_.at(k); }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const { return total_; }

  // Row-major stride of subsystem k: flat = sum_k index_k * stride(k).
  int stride(int k) const { return strides_.at(k); }

  bool operator==(const HilbertSpace& other) const {
    return dims_ == other.dims_;
  }

 private:
  std::vector<int> dims_;
  std::vector<int> strides_;
  int total_ = 0;
};

}  // namespace eraser::qcore
