#include "qmopt/manifold.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>

namespace qmopt {

namespace {

void check_shape(const ManifoldDescriptor& desc, const Matrix& Z, const char* what) {
  if (Z.rows() != desc.n || Z.cols() != desc.d) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(desc.n) + "x" +
                         std::to_string(desc.d) + ", got " + std::to_string(Z.rows()) + "x" +
                         std::to_string(Z.cols()));
  }
}

// diag(X^H Z) as a column vector of the per-column complex inner products.
Vector column_inners(const Matrix& X, const Matrix& Z) {
  Vector diag(X.cols());
  for (Index k = 0; k < X.cols(); ++k) diag(k) = X.col(k).dot(Z.col(k));
  return diag;
}

Matrix project_ambient(const ManifoldPoint& point, const Matrix& Z) {
  const Matrix& X = point.X;
  switch (point.descriptor.kind) {
    case ManifoldKind::Torus: {
      // On C^1 columns the full complex condition diag(X^H Z) = 0 admits only
      // Z = 0; the circle geometry keeps the phase direction, so only the
      // radial (real) part of each inner product is removed.
      Matrix P = Z;
      for (Index k = 0; k < X.cols(); ++k)
        P.col(k) -= X.col(k) * X.col(k).dot(Z.col(k)).real();
      return P;
    }
    case ManifoldKind::Sphere:
    case ManifoldKind::Oblique: {
      Matrix P = Z;
      Vector diag = column_inners(X, Z);
      for (Index k = 0; k < X.cols(); ++k) P.col(k) -= X.col(k) * diag(k);
      return P;
    }
    case ManifoldKind::Stiefel: {
      Matrix M = X.adjoint() * Z;
      return Z - X * ((M + M.adjoint()) * 0.5);
    }
    case ManifoldKind::Grassmannian:
      return Z - X * (X.adjoint() * Z);
  }
  throw UsageError("project_tangent: unknown manifold kind");
}

std::pair<Matrix, bool> thin_qr_sign_fixed(const Matrix& A) {
  Eigen::HouseholderQR<Matrix> qr(A);
  Matrix Q = qr.householderQ() * Matrix::Identity(A.rows(), A.cols());
  Matrix R = qr.matrixQR().topRows(A.cols()).template triangularView<Eigen::Upper>();
  const double scale = A.norm();
  bool full_rank = true;
  for (Index k = 0; k < A.cols(); ++k) {
    const double r = std::abs(R(k, k));
    if (r <= 1e-13 * std::max(1.0, scale)) {
      full_rank = false;
      continue;
    }
    // Rotate column k so the implied R diagonal is real positive; this makes
    // the factorization (and hence the retraction) unique and smooth.
    Q.col(k) *= R(k, k) / r;
  }
  return {Q, full_rank};
}

Complex unit_complex_gaussian(std::mt19937_64& rng, std::normal_distribution<double>& gauss,
                              Field field) {
  if (field == Field::Real) return Complex(gauss(rng), 0.0);
  return Complex(gauss(rng), gauss(rng)) / std::numbers::sqrt2;
}

}  // namespace

ManifoldDescriptor ManifoldDescriptor::sphere(Index n, Field field) {
  ManifoldDescriptor desc{ManifoldKind::Sphere, n, 1, field};
  desc.validate();
  return desc;
}

ManifoldDescriptor ManifoldDescriptor::oblique(Index n, Index d, Field field) {
  ManifoldDescriptor desc{ManifoldKind::Oblique, n, d, field};
  desc.validate();
  return desc;
}

ManifoldDescriptor ManifoldDescriptor::stiefel(Index n, Index p, Field field) {
  ManifoldDescriptor desc{ManifoldKind::Stiefel, n, p, field};
  desc.validate();
  return desc;
}

ManifoldDescriptor ManifoldDescriptor::grassmannian(Index n, Index p, Field field) {
  ManifoldDescriptor desc{ManifoldKind::Grassmannian, n, p, field};
  desc.validate();
  return desc;
}

ManifoldDescriptor ManifoldDescriptor::torus(Index d) {
  ManifoldDescriptor desc{ManifoldKind::Torus, 1, d, Field::Complex};
  desc.validate();
  return desc;
}

void ManifoldDescriptor::validate() const {
  if (n < 1 || d < 1) throw DimensionError("manifold dimensions must be positive");
  switch (kind) {
    case ManifoldKind::Sphere:
      if (d != 1) throw DimensionError("sphere requires d = 1");
      break;
    case ManifoldKind::Torus:
      if (n != 1) throw DimensionError("torus requires n = 1");
      if (field != Field::Complex) throw DimensionError("torus requires the complex field");
      break;
    case ManifoldKind::Stiefel:
    case ManifoldKind::Grassmannian:
      if (d > n) throw DimensionError("orthonormal frames require d <= n");
      break;
    case ManifoldKind::Oblique:
      break;
  }
}

double membership_error(const ManifoldDescriptor& desc, const Matrix& X) {
  if (X.rows() != desc.n || X.cols() != desc.d) {
    return std::numeric_limits<double>::infinity();
  }
  if (desc.unit_column_family()) {
    double worst = 0.0;
    for (Index k = 0; k < desc.d; ++k)
      worst = std::max(worst, std::abs(X.col(k).squaredNorm() - 1.0));
    return worst;
  }
  Matrix gram = X.adjoint() * X;
  return (gram - Matrix::Identity(desc.d, desc.d)).cwiseAbs().maxCoeff();
}

ManifoldPoint::ManifoldPoint(ManifoldDescriptor desc, Matrix x)
    : descriptor(desc), X(std::move(x)) {
  descriptor.validate();
  check_shape(descriptor, X, "ManifoldPoint");
  const double err = membership_error(descriptor, X);
  if (err > kMembershipTol) {
    throw PreconditionError("ManifoldPoint: membership violated by " + std::to_string(err));
  }
}

double tangency_error(const ManifoldPoint& at, const Matrix& Z) {
  if (Z.rows() != at.X.rows() || Z.cols() != at.X.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  const Matrix& X = at.X;
  double worst = 0.0;
  switch (at.descriptor.kind) {
    case ManifoldKind::Torus:
      for (Index k = 0; k < X.cols(); ++k)
        worst = std::max(worst, std::abs(X.col(k).dot(Z.col(k)).real()));
      break;
    case ManifoldKind::Sphere:
    case ManifoldKind::Oblique:
      worst = column_inners(X, Z).cwiseAbs().maxCoeff();
      break;
    case ManifoldKind::Stiefel: {
      Matrix M = X.adjoint() * Z;
      worst = (M + M.adjoint()).cwiseAbs().maxCoeff();
      break;
    }
    case ManifoldKind::Grassmannian:
      worst = (X.adjoint() * Z).cwiseAbs().maxCoeff();
      break;
  }
  return worst / std::max(1.0, Z.norm());
}

TangentVector::TangentVector(ManifoldPoint point, Matrix z)
    : at(std::move(point)), Z(std::move(z)) {
  check_shape(at.descriptor, Z, "TangentVector");
  const double err = tangency_error(at, Z);
  if (err > kTangencyTol) {
    throw PreconditionError("TangentVector: tangency violated by " + std::to_string(err));
  }
}

TangentVector project_tangent(const ManifoldPoint& point, const Matrix& Z) {
  check_shape(point.descriptor, Z, "project_tangent");
  return TangentVector(point, project_ambient(point, Z));
}

double metric(const TangentVector& z1, const TangentVector& z2) {
  if (z1.at.descriptor != z2.at.descriptor ||
      (z1.at.X - z2.at.X).norm() > kAnchorTol * std::max(1.0, z1.at.X.norm())) {
    throw UsageError("metric: tangent vectors anchored at different points");
  }
  return real_trace_inner(z1.Z, z2.Z);
}

double tangent_norm(const TangentVector& z) { return z.Z.norm(); }

ManifoldPoint retract_normalize(const ManifoldPoint& point, const TangentVector& xi,
                                double alpha) {
  if (!point.descriptor.unit_column_family()) {
    throw UsageError("retract_normalize: defined on unit-column manifolds only");
  }
  if (alpha == 0.0) return point;
  Matrix Y = point.X + alpha * xi.Z;
  for (Index k = 0; k < Y.cols(); ++k) {
    const double nrm = Y.col(k).norm();
    if (nrm < kZeroColumnTol) {
      throw DegenerateStepError("retract_normalize: column " + std::to_string(k) +
                                " vanished");
    }
    Y.col(k) /= nrm;
  }
  return ManifoldPoint(point.descriptor, std::move(Y));
}

Matrix skew_generator(const Vector& x, const Vector& v) {
  if (x.size() != v.size()) throw DimensionError("skew_generator: size mismatch");
  if (std::abs(x.norm() - 1.0) > 1e-10) {
    throw PreconditionError("skew_generator: x must be a unit column");
  }
  if (std::abs(x.dot(v)) > 1e-10 * std::max(1.0, v.norm())) {
    throw PreconditionError("skew_generator: v must satisfy x^H v = 0");
  }
  return v * x.adjoint() - x * v.adjoint();
}

ManifoldPoint retract_exp(const ManifoldPoint& point, const TangentVector& v, double t) {
  if (!point.descriptor.unit_column_family()) {
    throw UsageError("retract_exp: defined on unit-column manifolds only");
  }
  if (t == 0.0) return point;
  Matrix Y = point.X;
  for (Index k = 0; k < Y.cols(); ++k) {
    const double speed = v.Z.col(k).norm();
    if (speed < kZeroColumnTol) continue;  // fixed point, the ||v|| -> 0 limit
    const double angle = t * speed;
    Y.col(k) = std::cos(angle) * point.X.col(k) + (std::sin(angle) / speed) * v.Z.col(k);
  }
  return ManifoldPoint(point.descriptor, std::move(Y));
}

ManifoldPoint retract_stiefel(const ManifoldPoint& point, const TangentVector& v, double t) {
  if (!point.descriptor.orthonormal_family()) {
    throw UsageError("retract_stiefel: defined on Stiefel/Grassmannian only");
  }
  if (t == 0.0) return point;
  auto [Q, full_rank] = thin_qr_sign_fixed(point.X + t * v.Z);
  if (!full_rank) throw DegenerateStepError("retract_stiefel: step lost column rank");
  return ManifoldPoint(point.descriptor, std::move(Q));
}

TangentVector riemannian_grad(const ManifoldPoint& point, const Matrix& egrad) {
  return project_tangent(point, egrad);
}

TangentVector vector_transport(const ManifoldPoint& from, const ManifoldPoint& to,
                               const TangentVector& v) {
  if (from.descriptor != to.descriptor) {
    throw UsageError("vector_transport: manifolds differ");
  }
  if ((v.at.X - from.X).norm() > kAnchorTol * std::max(1.0, from.X.norm())) {
    throw UsageError("vector_transport: vector not anchored at `from`");
  }
  return project_tangent(to, v.Z);
}

ManifoldPoint random_point(const ManifoldDescriptor& desc, std::uint64_t seed) {
  desc.validate();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  if (desc.kind == ManifoldKind::Torus) {
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    Matrix X(1, desc.d);
    for (Index k = 0; k < desc.d; ++k) X(0, k) = std::polar(1.0, phase(rng));
    return ManifoldPoint(desc, std::move(X));
  }

  Matrix G(desc.n, desc.d);
  for (Index k = 0; k < desc.d; ++k)
    for (Index r = 0; r < desc.n; ++r) G(r, k) = unit_complex_gaussian(rng, gauss, desc.field);

  if (desc.unit_column_family()) {
    for (Index k = 0; k < desc.d; ++k) G.col(k).normalize();
    return ManifoldPoint(desc, std::move(G));
  }
  auto [Q, full_rank] = thin_qr_sign_fixed(G);
  if (!full_rank) throw DegenerateStepError("random_point: sampled a rank-deficient frame");
  return ManifoldPoint(desc, std::move(Q));
}

}  // namespace qmopt
