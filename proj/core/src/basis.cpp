#include "eraser/qcore/basis.hpp"

#include <cmath>
#include <stdexcept>

#include "eraser/tolerances.hpp"

namespace eraser::qcore {

MeasurementBasis::MeasurementBasis(std::string name, int target,
                                   std::vector<std::string> labels,
                                   std::vector<Amplitude> vectors)
    : name_(std::move(name)),
      target_(target),
      dim_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      vectors_(std::move(vectors)) {
  if (dim_ < 2 || static_cast<int>(vectors_.size()) != dim_ * dim_) {
    throw DimensionMismatch("MeasurementBasis: bad vector shape");
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      Amplitude s{0.0, 0.0};
      for (int k = 0; k < dim_; ++k) {
        s += std::conj(vectors_[i * dim_ + k]) * vectors_[j * dim_ + k];
      }
      const double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(s - expect) > kAlgebraicTol) {
        throw std::invalid_argument("MeasurementBasis: not orthonormal");
      }
    }
  }
}

MeasurementBasis MeasurementBasis::computational(
    std::string name, int target, std::vector<std::string> labels) {
  MeasurementBasis b;
  b.name_ = std::move(name);
  b.target_ = target;
  b.dim_ = static_cast<int>(labels.size());
  if (b.dim_ < 2) throw DimensionMismatch("MeasurementBasis: dim < 2");
  b.labels_ = std::move(labels);
  b.computational_ = true;
  return b;
}

std::span<const Amplitude> MeasurementBasis::vector(int j) const {
  if (j < 0 || j >= dim_) {
    throw DimensionMismatch("MeasurementBasis: vector index out of range");
  }
  if (computational_) {
    throw std::logic_error(
        "MeasurementBasis: computational basis stores no explicit vectors");
  }
  return {vectors_.data() + static_cast<size_t>(j) * dim_,
          static_cast<size_t>(dim_)};
}

}  // namespace eraser::qcore
