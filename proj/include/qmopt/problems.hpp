#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "qmopt/solve.hpp"

namespace qmopt {

/// Subspace objective 1/2 Tr(X^H H X K) over St(n, p): H is the system
/// operator, K the strictly decreasing positive weights that pin the ordering
/// of the recovered eigenvectors.
struct EigenstateProblem {
  Matrix H;      ///< n x n Hermitian
  RealVector K;  ///< p weights, strictly decreasing, positive

  EigenstateProblem(Matrix H, RealVector K);

  Index n() const { return H.rows(); }
  Index p() const { return K.size(); }
};

/// Pilot contamination minimization over OB(T, K): more users than orthogonal
/// pilots, cross-correlations weighted by large-scale fading.
struct PilotProblem {
  Index num_aps = 0;       ///< L
  Index num_users = 0;     ///< K, with K > T
  Index pilot_length = 0;  ///< T
  RealMatrix beta;         ///< L x K nonnegative fading coefficients
  RealVector weights;      ///< per-user column sums of beta (diagonal of B_w)

  PilotProblem(Index num_aps, Index num_users, Index pilot_length, RealMatrix beta);
};

/// Received-power maximization Tr(W^H R W) over St(n_t, n_r).
struct BeamformingProblem {
  Matrix H_ch;  ///< n_r x n_t channel
  Matrix R;     ///< n_t x n_t Gram matrix H_ch^H H_ch

  explicit BeamformingProblem(Matrix H_ch);
  BeamformingProblem(Matrix H_ch, Matrix R);  // validates R against H_ch

  Index n_t() const { return H_ch.cols(); }
  Index n_r() const { return H_ch.rows(); }
};

/// Reflected-power maximization |h_r^H Phi H_b f|^2 over the N-torus of
/// unit-modulus phase shifts.
struct RisProblem {
  Vector h_r;    ///< N, surface-to-receiver channel
  Matrix H_b;    ///< N x M, transmitter-to-surface channel
  Vector f;      ///< M, transmit beamformer
  Matrix Q;      ///< H_b f f^H H_b^H
  Matrix R_ris;  ///< h_r h_r^H

  RisProblem(Vector h_r, Matrix H_b, Vector f);

  Index num_elements() const { return h_r.size(); }
};

// --- eigenstate / subspace objectives ---------------------------------------

double eigenstate_objective(const EigenstateProblem& prob, const Matrix& X);
double eigenstate_objective(const EigenstateProblem& prob, const ManifoldPoint& X);
Matrix eigenstate_egrad(const EigenstateProblem& prob, const Matrix& X);
double eigenstate_objective_quantum(const EigenstateProblem& prob, const EncodedState& state);

/// 1/2 Tr(X^H H X), invariant under right multiplication by unitaries.
double grassmann_objective(const EigenstateProblem& prob, const Matrix& X);
double grassmann_objective(const EigenstateProblem& prob, const ManifoldPoint& X);
Matrix grassmann_egrad(const EigenstateProblem& prob, const Matrix& X);
double grassmann_objective_quantum(const EigenstateProblem& prob, const EncodedState& state);

// --- pilot design ------------------------------------------------------------

/// Triple-sum contamination: sum_l sum_k sum_{k' != k} beta_{l,k'} |f_k^H f_k'|^2.
double pilot_objective_direct(const PilotProblem& prob, const Matrix& F);
double pilot_objective_direct(const PilotProblem& prob, const ManifoldPoint& F);

/// Trace reformulation Tr(B_w |F^H F|.^2 J); differs from the direct form by
/// the constant sum_{l,k} beta_{l,k} on the manifold.
double pilot_objective_trace(const PilotProblem& prob, const Matrix& F);
double pilot_objective_trace(const PilotProblem& prob, const ManifoldPoint& F);

Matrix pilot_egrad(const PilotProblem& prob, const Matrix& F);

/// Dense evaluation of the quartic Tr((F^H B F)(F^H A F)).
double pilot_quartic_trace(const Matrix& F, const Matrix& B_op, const Matrix& A_op);

/// Quartic trace via index-register expectation values
/// scale^4 sum_{i,k} <Psi|M_ki x B|Psi><Psi|M_ik x A|Psi>. Empty operators
/// default to I_T.
double pilot_objective_quantum(const PilotProblem& prob, const EncodedState& state,
                               const Matrix& B_op = Matrix(), const Matrix& A_op = Matrix());

/// Contamination objective evaluated from Gram expectation values.
double pilot_contamination_quantum(const PilotProblem& prob, const EncodedState& state);

// --- beamforming --------------------------------------------------------------

double beamforming_objective(const BeamformingProblem& prob, const Matrix& W);
double beamforming_objective(const BeamformingProblem& prob, const ManifoldPoint& W);
Matrix beamforming_egrad(const BeamformingProblem& prob, const Matrix& W);
double beamforming_objective_quantum(const BeamformingProblem& prob, const EncodedState& state);

// --- RIS phase tuning ----------------------------------------------------------

/// |h_r^H Phi(theta) H_b f|^2 for a 1 x N row of unit-modulus phases.
double ris_objective(const RisProblem& prob, const Matrix& phases);
double ris_objective(const RisProblem& prob, const ManifoldPoint& phases);

/// Same objective through the trace form Tr(Phi Q Phi^H R).
double ris_objective_trace(const RisProblem& prob, const Matrix& phases);

double ris_objective_quantum(const RisProblem& prob, const EncodedState& state);
Matrix ris_egrad(const RisProblem& prob, const Matrix& phases);

// --- scenarios and certificates -------------------------------------------------

enum class ProblemKind { Eigenstate, Pilot, Beamforming, Ris };

using Scenario = std::variant<EigenstateProblem, PilotProblem, BeamformingProblem, RisProblem>;
using DimMap = std::map<std::string, Index>;

EigenstateProblem generate_eigenstate(Index n, Index p, std::uint64_t seed);
PilotProblem generate_pilot(Index num_aps, Index num_users, Index pilot_length,
                            std::uint64_t seed);
BeamformingProblem generate_beamforming(Index n_t, Index n_r, std::uint64_t seed);
RisProblem generate_ris(Index num_elements, Index num_tx_antennas, std::uint64_t seed);

/// Seed-deterministic instance with Rayleigh-fading channels and log-uniform
/// fading coefficients. Throws ConfigError for missing dim keys and
/// DimensionError for infeasible values.
Scenario generate_scenario(ProblemKind kind, const DimMap& dims, std::uint64_t seed);

/// Manifold each problem optimizes over.
ManifoldDescriptor domain(const Scenario& scenario);

/// Closed-form optimum of the natural-sense objective, when one exists.
double eigenstate_optimum(const EigenstateProblem& prob);
double grassmann_optimum(const EigenstateProblem& prob);
double beamforming_optimum(const BeamformingProblem& prob);
double ris_optimum(const RisProblem& prob);
std::optional<double> analytic_optimum(const Scenario& scenario);

/// Solver hooks (objective, Euclidean gradient, expectation-value route).
ObjectiveModel make_model(const EigenstateProblem& prob);
ObjectiveModel make_grassmann_model(const EigenstateProblem& prob);
ObjectiveModel make_model(const PilotProblem& prob);
ObjectiveModel make_model(const BeamformingProblem& prob);
ObjectiveModel make_model(const RisProblem& prob);
ObjectiveModel make_model(const Scenario& scenario);

}  // namespace qmopt
