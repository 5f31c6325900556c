#include "eraser/qcore/density.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "eraser/qcore/errors.hpp"
#include "eraser/tolerances.hpp"

namespace eraser::qcore {

DensityMatrix::DensityMatrix(int dim, std::vector<Amplitude> elements)
    : dim_(dim), m_(std::move(elements)) {
  if (dim_ < 2 || static_cast<int>(m_.size()) != dim_ * dim_) {
    throw DimensionMismatch("DensityMatrix: bad shape");
  }
  if (std::abs(trace_real() - 1.0) > kAlgebraicTol) {
    throw std::invalid_argument("DensityMatrix: trace != 1");
  }
  if (max_hermiticity_defect() > kAlgebraicTol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
}

double DensityMatrix::trace_real() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += m_[i * dim_ + i].real();
  return t;
}

double DensityMatrix::max_hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    worst = std::max(worst, std::abs(m_[i * dim_ + i].imag()));
    for (int j = i + 1; j < dim_; ++j) {
      worst = std::max(
          worst, std::abs(m_[i * dim_ + j] - std::conj(m_[j * dim_ + i])));
    }
  }
  return worst;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::MatrixXcd rho(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) rho(i, j) = m_[i * dim_ + j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DensityMatrix::validate() const {
  if (std::abs(trace_real() - 1.0) > kAlgebraicTol) {
    throw std::runtime_error("DensityMatrix: trace invariant violated");
  }
  if (max_hermiticity_defect() > kAlgebraicTol) {
    throw std::runtime_error("DensityMatrix: hermiticity invariant violated");
  }
  if (min_eigenvalue() < -kEigenvalueTol) {
    throw std::runtime_error("DensityMatrix: negative eigenvalue");
  }
}

std::vector<double> DensityMatrix::diagonal_in(
    const MeasurementBasis& basis) const {
  if (basis.dim() != dim_) {
    throw DimensionMismatch("diagonal_in: basis dim mismatch");
  }
  std::vector<double> diag(dim_, 0.0);
  for (int j = 0; j < dim_; ++j) {
    if (basis.is_computational()) {
      diag[j] = m_[j * dim_ + j].real();
      continue;
    }
    const auto v = basis.vector(j);
    Amplitude s{0.0, 0.0};
    for (int r = 0; r < dim_; ++r) {
      for (int c = 0; c < dim_; ++c) {
        s += std::conj(v[r]) * m_[r * dim_ + c] * v[c];
      }
    }
    diag[j] = s.real();
  }
  return diag;
}

DensityMatrix reduced_density(const StateVector& state, int subsystem) {
  const HilbertSpace& space = state.space();
  if (subsystem < 0 || subsystem >= space.subsystems()) {
    throw DimensionMismatch("reduced_density: bad subsystem");
  }
  const int d = space.dim(subsystem);
  const int stride = space.stride(subsystem);
  const int block = d * stride;
  const int total = space.total_dim();
  const auto amps = state.amps();

  std::vector<Amplitude> rho(static_cast<size_t>(d) * d, Amplitude{0.0, 0.0});
  for (int base = 0; base < total; base += block) {
    for (int off = 0; off < stride; ++off) {
      for (int i = 0; i < d; ++i) {
        const Amplitude ai = amps[base + off + i * stride];
        for (int j = 0; j < d; ++j) {
          rho[i * d + j] += ai * std::conj(amps[base + off + j * stride]);
        }
      }
    }
  }
  return DensityMatrix(d, std::move(rho));
}

}  // namespace eraser::qcore
