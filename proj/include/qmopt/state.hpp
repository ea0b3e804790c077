#pragma once

#include "qmopt/manifold.hpp"

namespace qmopt {

constexpr double kStateNormTol = 1e-12;
constexpr double kPaddingTol = 1e-12;

/// Qubit budget for holding an n x d matrix on an index (x) column register.
struct RegisterShape {
  int index_qubits = 0;   ///< ceil(log2 d)
  int column_qubits = 0;  ///< ceil(log2 n)
  Index d = 1;            ///< logical columns
  Index n = 1;            ///< logical rows

  static RegisterShape for_matrix(Index n, Index d);

  Index block_size() const { return Index{1} << column_qubits; }
  Index size() const { return Index{1} << (index_qubits + column_qubits); }
  int qubits() const { return index_qubits + column_qubits; }

  bool operator==(const RegisterShape&) const = default;
};

/// Unit-norm statevector over the padded register plus the Frobenius norm that
/// was divided out. scale == 0 marks the zero-tangent sentinel, the one state
/// consumers must branch on before using amplitudes.
struct EncodedState {
  RegisterShape shape;
  Vector amplitudes;
  double scale = 0.0;

  bool is_sentinel() const { return scale == 0.0; }
};

/// Product observable M (index register) tensor B (column register).
struct IndexedOperator {
  Matrix M;  ///< d x d
  Matrix B;  ///< n x n
};

/// Column-major vectorization of X into a normalized statevector.
EncodedState encode(const Matrix& X);

/// Inverse of encode: scale times the de-padded reshape of the amplitudes.
Matrix decode(const EncodedState& state);

/// Canonical sentinel for a projection that annihilated its input.
EncodedState zero_tangent_sentinel(const RegisterShape& shape);

/// Re(scale1 scale2 <Psi1|Psi2>) == Re(Tr(Z1^H Z2)) of the decoded matrices.
double overlap_inner_product(const EncodedState& s1, const EncodedState& s2);

/// <Psi|(M tensor B)|Psi> with M, B zero-extended onto the padded register.
Complex expectation(const EncodedState& state, const IndexedOperator& op);

/// Per-index-block tangent projection |z_k> - |psi_k><psi_k|z_k>, renormalized.
/// `state` must encode a unit-column point. Returns the sentinel when the
/// projection vanishes.
EncodedState quantum_project(const EncodedState& state, const EncodedState& z_state);

/// Block-diagonal rotation sum_k |k><k| tensor exp(t A_k) applied to `state`,
/// with A_k the anti-Hermitian generator of column k of V.
EncodedState quantum_retract(const EncodedState& state, const TangentVector& v, double t);

/// Equal-amplitude state over the logical slots (the all-Hadamard state when
/// n and d are powers of two); decodes to unit-norm equal-entry columns.
EncodedState prepare_uniform(const RegisterShape& shape);

}  // namespace qmopt
