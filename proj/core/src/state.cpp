#include "eraser/qcore/state.hpp"

#include <cmath>
#include <stdexcept>

#include "eraser/tolerances.hpp"

namespace eraser::qcore {

namespace {

double squared_norm(const std::vector<Amplitude>& amps) {
  double s = 0.0;
  for (const Amplitude& a : amps) s += std::norm(a);
  return s;
}

void check_finite(const std::vector<Amplitude>& amps) {
  for (const Amplitude& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("StateVector: non-finite amplitude");
    }
  }
}

}  // namespace

StateVector::StateVector(HilbertSpace space, std::vector<Amplitude> amps)
    : space_(std::move(space)), amps_(std::move(amps)) {
  if (static_cast<int>(amps_.size()) != space_.total_dim()) {
    throw DimensionMismatch("StateVector: amplitude count != total dim");
  }
  check_finite(amps_);
  if (std::abs(std::sqrt(squared_norm(amps_)) - 1.0) > kAlgebraicTol) {
    throw std::invalid_argument("StateVector: not normalized");
  }
}

StateVector StateVector::normalized(HilbertSpace space,
                                    std::vector<Amplitude> amps) {
  if (static_cast<int>(amps.size()) != space.total_dim()) {
    throw DimensionMismatch("StateVector: amplitude count != total dim");
  }
  check_finite(amps);
  const double n = std::sqrt(squared_norm(amps));
  if (n <= kZeroProbability) {
    throw std::invalid_argument("StateVector: cannot normalize zero vector");
  }
  for (Amplitude& a : amps) a /= n;
  return StateVector(std::move(space), std::move(amps));
}

StateVector StateVector::basis_state(HilbertSpace space, int flat_index) {
  if (flat_index < 0 || flat_index >= space.total_dim()) {
    throw DimensionMismatch("basis_state: index out of range");
  }
  std::vector<Amplitude> amps(space.total_dim(), Amplitude{0.0, 0.0});
  amps[flat_index] = Amplitude{1.0, 0.0};
  return StateVector(std::move(space), std::move(amps));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

Amplitude StateVector::inner(const StateVector& other) const {
  if (!(space_ == other.space_)) {
    throw DimensionMismatch("inner: spaces differ");
  }
  Amplitude s{0.0, 0.0};
  for (size_t i = 0; i < amps_.size(); ++i) {
    s += std::conj(amps_[i]) * other.amps_[i];
  }
  return s;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<int> dims = a.space().dims();
  dims.insert(dims.end(), b.space().dims().begin(), b.space().dims().end());

  std::vector<Amplitude> out;
  out.reserve(static_cast<size_t>(a.dim()) * b.dim());
  for (const Amplitude& x : a.amps()) {
    for (const Amplitude& y : b.amps()) out.push_back(x * y);
  }
  return StateVector(HilbertSpace(std::move(dims)), std::move(out));
}

SubsystemUnitary::SubsystemUnitary(int target, int dim,
                                   std::vector<Amplitude> matrix)
    : target_(target), dim_(dim), m_(std::move(matrix)) {
  if (dim_ < 2 || static_cast<int>(m_.size()) != dim_ * dim_) {
    throw DimensionMismatch("SubsystemUnitary: bad matrix shape");
  }
  // U†U = I entrywise.
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      Amplitude s{0.0, 0.0};
      for (int k = 0; k < dim_; ++k) {
        s += std::conj(m_[k * dim_ + i]) * m_[k * dim_ + j];
      }
      const Amplitude expect = (i == j) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
      if (std::abs(s - expect) > kAlgebraicTol) {
        throw std::invalid_argument("SubsystemUnitary: matrix is not unitary");
      }
    }
  }
}

StateVector apply_unitary(const StateVector& state,
                          const SubsystemUnitary& u) {
  const HilbertSpace& space = state.space();
  if (u.target() < 0 || u.target() >= space.subsystems()) {
    throw DimensionMismatch("apply_unitary: bad target subsystem");
  }
  if (space.dim(u.target()) != u.dim()) {
    throw DimensionMismatch("apply_unitary: dim mismatch on target");
  }

  const int d = u.dim();
  const int stride = space.stride(u.target());
  const int block = d * stride;
  const int total = space.total_dim();

  std::vector<Amplitude> out(state.amps().begin(), state.amps().end());
  std::vector<Amplitude> x(d), y(d);
  for (int base = 0; base < total; base += block) {
    for (int off = 0; off < stride; ++off) {
      for (int i = 0; i < d; ++i) x[i] = out[base + off + i * stride];
      for (int r = 0; r < d; ++r) {
        Amplitude s{0.0, 0.0};
        for (int c = 0; c < d; ++c) s += u.at(r, c) * x[c];
        y[r] = s;
      }
      for (int i = 0; i < d; ++i) out[base + off + i * stride] = y[i];
    }
  }
  return StateVector(space, std::move(out));
}

}  // namespace eraser::qcore
