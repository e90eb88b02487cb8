#include "krein/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace krein::linalg {

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  // Only the top singular value is needed; the Hermitian eigensolver on the
  // smaller Gram matrix is far cheaper than a full SVD and loses no relative
  // accuracy at the top of the spectrum.
  const Matrix gram = m.rows() <= m.cols() ? Matrix(m * m.adjoint()) : Matrix(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

namespace {

double rank_threshold(const Eigen::VectorXd& singular, double tol) {
  const double top = singular.size() > 0 ? singular(0) : 0.0;
  return tol * std::max(1.0, top);
}

}  // namespace

Eigen::Index rank(const Matrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  const double cut = rank_threshold(s, tol);
  return (s.array() > cut).count();
}

Matrix column_space(const Matrix& m, double tol) {
  if (m.size() == 0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cut = rank_threshold(s, tol);
  const Eigen::Index r = (s.array() > cut).count();
  return svd.matrixU().leftCols(r);
}

Matrix null_space(const Matrix& m, double tol) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = rank_threshold(s, tol);
  const Eigen::Index r = (s.array() > cut).count();
  return svd.matrixV().rightCols(cols - r);
}

Matrix orthogonal_complement(const Matrix& q) {
  const Eigen::Index n = q.rows();
  if (q.cols() == 0) return Matrix::Identity(n, n);
  return null_space(q.adjoint());
}

double max_principal_angle_sine(const Matrix& q1, const Matrix& q2) {
  if (q1.cols() != q2.cols() || q1.rows() != q2.rows()) return 1.0;
  if (q1.cols() == 0) return 0.0;
  const Matrix residual = q2 - q1 * (q1.adjoint() * q2);
  return operator_norm(residual);
}

std::vector<Eigen::Index> independent_columns(const Matrix& m, double tol) {
  std::vector<Eigen::Index> chosen;
  Matrix basis(m.rows(), 0);
  if (m.size() == 0) return chosen;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Vector v = m.col(j);
    // Two passes of Gram-Schmidt keep the test stable for nearly dependent input.
    for (int pass = 0; pass < 2; ++pass) {
      if (basis.cols() > 0) v -= basis * (basis.adjoint() * v);
    }
    const double norm = v.norm();
    if (norm > tol * scale) {
      basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
      basis.col(basis.cols() - 1) = v / norm;
      chosen.push_back(j);
    }
  }
  return chosen;
}

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Eigen::Index n) {
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

Complex random_unit_disk(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double radius = std::sqrt(unit(rng));
  const double phase = 2.0 * std::numbers::pi * unit(rng);
  return std::polar(radius, phase);
}

Vector random_coords(Rng& rng, Eigen::Index d) {
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = random_unit_disk(rng);
  return v;
}

Matrix random_unitary(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

}  // namespace krein::linalg
