#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace qmopt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Operand shapes that cannot be combined.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operands that do not belong together (mismatched anchors, descriptors, ...).
struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A numerical precondition does not hold (non-unit column, non-tangent input, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A retraction step left no usable point (vanishing column, rank loss).
struct DegenerateStepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An encoded state carries amplitude mass in padding slots.
struct CorruptedStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A run configuration that cannot be parsed or fails its constraints.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Re(Tr(A^H B)), the real trace pairing both backends share.
inline double real_trace_inner(const Matrix& a, const Matrix& b) {
  return a.conjugate().cwiseProduct(b).sum().real();
}

}  // namespace qmopt
