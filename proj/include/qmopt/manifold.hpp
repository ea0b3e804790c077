#pragma once

#include <cstdint>

#include "qmopt/types.hpp"

namespace qmopt {

enum class ManifoldKind { Sphere, Oblique, Stiefel, Grassmannian, Torus };
enum class Field { Real, Complex };

// Feasibility / tangency tolerances used by the certifying constructors.
constexpr double kMembershipTol = 1e-12;
constexpr double kTangencyTol = 1e-12;
constexpr double kAnchorTol = 1e-10;
constexpr double kZeroColumnTol = 1e-14;

/// Matrix shape n x d plus the constraint family its points satisfy.
struct ManifoldDescriptor {
  ManifoldKind kind = ManifoldKind::Oblique;
  Index n = 1;  ///< ambient dimension per column
  Index d = 1;  ///< number of columns
  Field field = Field::Complex;

  static ManifoldDescriptor sphere(Index n, Field field = Field::Complex);
  static ManifoldDescriptor oblique(Index n, Index d, Field field = Field::Complex);
  static ManifoldDescriptor stiefel(Index n, Index p, Field field = Field::Complex);
  static ManifoldDescriptor grassmannian(Index n, Index p, Field field = Field::Complex);
  static ManifoldDescriptor torus(Index d);

  /// Columns constrained to unit norm (sphere, oblique, torus) as opposed to
  /// mutually orthonormal (Stiefel, Grassmannian).
  bool unit_column_family() const {
    return kind == ManifoldKind::Sphere || kind == ManifoldKind::Oblique ||
           kind == ManifoldKind::Torus;
  }
  bool orthonormal_family() const { return !unit_column_family(); }

  void validate() const;  // throws DimensionError

  bool operator==(const ManifoldDescriptor&) const = default;
};

/// Largest violation of the membership constraint of `desc` by X.
double membership_error(const ManifoldDescriptor& desc, const Matrix& X);

/// A matrix certified (at construction) to lie on its manifold.
struct ManifoldPoint {
  ManifoldDescriptor descriptor;
  Matrix X;

  ManifoldPoint(ManifoldDescriptor desc, Matrix x);
};

/// Largest violation of the tangency constraint at `at` by Z, relative to
/// max(1, ||Z||_F).
double tangency_error(const ManifoldPoint& at, const Matrix& Z);

/// An ambient matrix certified tangent at its anchor point.
struct TangentVector {
  ManifoldPoint at;
  Matrix Z;

  TangentVector(ManifoldPoint point, Matrix z);
};

/// Orthogonal projection of an ambient matrix onto the tangent space at `point`.
TangentVector project_tangent(const ManifoldPoint& point, const Matrix& Z);

/// Riemannian metric Re(Tr(Z1^H Z2)); both vectors must share an anchor.
double metric(const TangentVector& z1, const TangentVector& z2);

double tangent_norm(const TangentVector& z);

/// Column-wise normalization retraction (unit-column manifolds).
ManifoldPoint retract_normalize(const ManifoldPoint& point, const TangentVector& xi,
                                double alpha);

/// Anti-Hermitian generator A = v x^H - x v^H with A x = v. Requires a unit
/// column x and a direction v with x^H v = 0.
Matrix skew_generator(const Vector& x, const Vector& v);

/// Exponential-map retraction, column-wise great-circle motion (unit-column
/// manifolds). Columns with ||v_k|| < 1e-14 are fixed points.
ManifoldPoint retract_exp(const ManifoldPoint& point, const TangentVector& v, double t);

/// QR-based retraction with sign-fixed R diagonal (Stiefel, Grassmannian).
ManifoldPoint retract_stiefel(const ManifoldPoint& point, const TangentVector& v, double t);

/// Projection of the Euclidean gradient onto the tangent space.
TangentVector riemannian_grad(const ManifoldPoint& point, const Matrix& egrad);

/// Projection transport of a tangent vector into the tangent space at `to`.
TangentVector vector_transport(const ManifoldPoint& from, const ManifoldPoint& to,
                               const TangentVector& v);

/// Seed-deterministic point sampling.
ManifoldPoint random_point(const ManifoldDescriptor& desc, std::uint64_t seed);

}  // namespace qmopt
