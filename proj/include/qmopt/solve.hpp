#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qmopt/state.hpp"

namespace qmopt {

enum class Method { GradientDescent, ConjugateGradient };
enum class Retraction { Normalize, Exponential, QR };
enum class CgVariant { FletcherReeves, PolakRibiere };
enum class Backend { Classical, QuantumEmulated };
enum class Termination { GradTol, MaxIters, LineSearchFail };
enum class Sense { Minimize, Maximize };

struct SolverConfig {
  Method method = Method::ConjugateGradient;
  Retraction retraction = Retraction::Exponential;
  int max_iters = 500;
  double grad_tol = 1e-8;
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;
  double initial_step = 1.0;
  CgVariant cg_variant = CgVariant::PolakRibiere;
  Backend backend = Backend::Classical;
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError on out-of-range fields
};

struct IterateRecord {
  int iter = 0;
  double objective = 0.0;  ///< natural-sense objective value
  double grad_norm = 0.0;  ///< Riemannian gradient norm
  double step = 0.0;       ///< accepted step size (0 for the initial record)
};

struct RunReport {
  std::vector<IterateRecord> iterates;
  ManifoldPoint final_point;
  Termination termination = Termination::MaxIters;
  double wall_time = 0.0;  ///< seconds
};

/// Evaluation hooks a problem exposes to the solver. Values and gradients are
/// in the problem's natural sense; the solver flips signs for maximization.
/// `value_encoded` is the expectation-value route the quantum-emulated backend
/// uses; leave it empty for classical-only models.
struct ObjectiveModel {
  Sense sense = Sense::Minimize;
  std::function<double(const Matrix&)> value;
  std::function<Matrix(const Matrix&)> euclidean_grad;
  std::function<double(const EncodedState&)> value_encoded;
};

/// Riemannian first-order descent from `init`. Deterministic for a fixed
/// (model, init, config).
RunReport solve(const ObjectiveModel& model, const ManifoldPoint& init,
                const SolverConfig& config);

struct LineSearchResult {
  bool success = false;
  double step = 0.0;
  double value = 0.0;                  ///< objective at the accepted point
  std::optional<ManifoldPoint> point;  ///< empty on failure
};

using RetractFn =
    std::function<ManifoldPoint(const ManifoldPoint&, const TangentVector&, double)>;

/// Armijo backtracking along the retraction curve: accepts the largest step
/// initial_step * backtrack_factor^m (m <= 60) with
/// f(R_X(t dir)) <= f(X) - armijo_c * t * ||dir||^2.
LineSearchResult line_search(const ManifoldPoint& point, const TangentVector& direction,
                             const std::function<double(const Matrix&)>& objective,
                             const RetractFn& retract, const SolverConfig& config);

/// Conjugate-gradient direction with restart to steepest descent whenever the
/// result fails to be a descent direction. History vectors must already be
/// transported to g_new's anchor.
TangentVector cg_direction(const TangentVector& g_new,
                           const TangentVector& g_old_transported,
                           const TangentVector& dir_old_transported, CgVariant variant);

}  // namespace qmopt
