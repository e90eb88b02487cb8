#include "krein/finite_krein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "krein/linalg.hpp"

namespace krein {

namespace {

std::string idx(std::size_t i) { return "basis[" + std::to_string(i) + "]"; }

}  // namespace

KreinAlgebra KreinAlgebra::from_matrices(std::vector<Matrix> basis, Matrix symmetry,
                                         std::optional<Vector> odd_generator, double tol) {
  if (basis.empty()) throw InvalidAlgebraError("basis is empty");
  const Eigen::Index n = symmetry.rows();
  if (n == 0 || symmetry.cols() != n)
    throw InvalidAlgebraError("symmetry_unitary is not a square matrix");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].rows() != n || basis[i].cols() != n)
      throw InvalidAlgebraError(idx(i) + " does not match ambient_dim " + std::to_string(n));
  }
  const Matrix identity = Matrix::Identity(n, n);
  if ((symmetry.adjoint() * symmetry - identity).norm() > tol)
    throw InvalidAlgebraError("symmetry_unitary not unitary");
  if ((symmetry * symmetry - identity).norm() > tol)
    throw InvalidAlgebraError("symmetry_unitary does not square to identity");

  KreinAlgebra a;
  a.n_ = n;
  a.tol_ = tol;
  a.basis_ = std::move(basis);
  a.symmetry_ = std::move(symmetry);
  const Eigen::Index d = a.dim();

  Matrix stacked(n * n, d);
  for (Eigen::Index i = 0; i < d; ++i) stacked.col(i) = linalg::vec(a.basis_[i]);
  if (linalg::rank(stacked, tol) < d) throw InvalidAlgebraError("basis is linearly dependent");
  Eigen::HouseholderQR<Matrix> qr(stacked);
  a.q_ = qr.householderQ() * Matrix::Identity(n * n, d);
  a.frame_ = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();

  auto coords_or_throw = [&](const Matrix& m, const std::string& what) {
    double residual = 0.0;
    Vector c = a.project(m, &residual);
    if (residual > tol * std::max(1.0, m.norm())) throw InvalidAlgebraError(what);
    return c;
  };

  a.left_mul_.assign(d, Matrix(d, d));
  a.adjoint_map_.resize(d, d);
  a.alpha_map_.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const Matrix& bi = a.basis_[i];
    for (Eigen::Index j = 0; j < d; ++j) {
      a.left_mul_[i].col(j) = coords_or_throw(
          bi * a.basis_[j], "span not closed under product: " + idx(i) + " * " + idx(j));
    }
    a.adjoint_map_.col(i) =
        coords_or_throw(bi.adjoint(), "span not closed under adjoint: " + idx(i));
    a.alpha_map_.col(i) = coords_or_throw(a.symmetry_ * bi * a.symmetry_,
                                          "span not invariant under the symmetry: " + idx(i));
  }

  // Unit u solves B_i u = B_i and u B_i = B_i for every basis element.
  Matrix system(2 * d * d, d);
  Vector rhs = Vector::Zero(2 * d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      // (sum_i u_i B_i) B_j: coefficient column i is coords(B_i B_j).
      system.block(j * d, i, d, 1) = a.left_mul_[i].col(j);
    }
    system.block(d * d + j * d, 0, d, d) = a.left_mul_[j];
    rhs(j * d + j) = 1.0;
    rhs(d * d + j * d + j) = 1.0;
  }
  const Vector unit = system.colPivHouseholderQr().solve(rhs);
  if ((system * unit - rhs).norm() > tol * std::max(1.0, unit.norm()))
    throw InvalidAlgebraError("algebra has no unit");
  a.unit_ = GradedElement{unit};

  if (odd_generator) {
    if (odd_generator->size() != d)
      throw InvalidAlgebraError("odd_generator has " + std::to_string(odd_generator->size()) +
                                " coordinates, expected " + std::to_string(d));
    a.odd_generator_ = GradedElement{*odd_generator};
  }

  const Matrix id_d = Matrix::Identity(d, d);
  const Matrix even_proj = 0.5 * (id_d + a.alpha_map_);
  const Matrix odd_proj = 0.5 * (id_d - a.alpha_map_);
  auto select = [&](const Matrix& proj) {
    const auto cols = linalg::independent_columns(a.frame_ * proj, tol);
    Matrix out(d, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) out.col(k) = proj.col(cols[k]);
    return out;
  };
  a.even_basis_ = select(even_proj);
  a.odd_basis_ = select(odd_proj);
  return a;
}

KreinAlgebra KreinAlgebra::with_odd_generator(std::optional<Vector> generator) const {
  KreinAlgebra copy = *this;
  if (generator && generator->size() != dim())
    throw InvalidAlgebraError("odd_generator has wrong coordinate count");
  copy.odd_generator_ = generator ? std::optional<GradedElement>(GradedElement{*generator})
                                  : std::nullopt;
  return copy;
}

Vector KreinAlgebra::project(const Matrix& ambient, double* residual) const {
  const Vector v = linalg::vec(ambient);
  const Vector coeffs = q_.adjoint() * v;
  if (residual) *residual = (v - q_ * coeffs).norm();
  return frame_.triangularView<Eigen::Upper>().solve(coeffs);
}

GradedElement KreinAlgebra::basis_element(Eigen::Index i) const {
  Vector c = Vector::Zero(dim());
  c(i) = 1.0;
  return {c};
}

GradedElement KreinAlgebra::element(const Matrix& ambient) const {
  if (ambient.rows() != n_ || ambient.cols() != n_)
    throw OutsideSpanError("matrix does not match ambient dimension");
  double residual = 0.0;
  Vector c = project(ambient, &residual);
  if (residual > tol_ * std::max(1.0, ambient.norm()))
    throw OutsideSpanError("matrix lies outside the algebra span (residual " +
                           std::to_string(residual) + ")");
  return {c};
}

GradedElement KreinAlgebra::element(Vector coords) const {
  if (coords.size() != dim())
    throw OutsideSpanError("expected " + std::to_string(dim()) + " coordinates, got " +
                           std::to_string(coords.size()));
  return {std::move(coords)};
}

double KreinAlgebra::span_residual(const Matrix& ambient) const {
  double residual = 0.0;
  project(ambient, &residual);
  return residual;
}

Matrix KreinAlgebra::to_matrix(const GradedElement& x) const {
  Matrix m = Matrix::Zero(n_, n_);
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (x.coords(i) != Complex(0.0)) m += x.coords(i) * basis_[i];
  }
  return m;
}

GradedElement KreinAlgebra::mul(const GradedElement& x, const GradedElement& y) const {
  Vector out = Vector::Zero(dim());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (x.coords(i) != Complex(0.0)) out += x.coords(i) * (left_mul_[i] * y.coords);
  }
  return {out};
}

GradedElement KreinAlgebra::alpha(const GradedElement& x) const { return {alpha_map_ * x.coords}; }

GradedElement KreinAlgebra::dagger(const GradedElement& x) const {
  return {adjoint_map_ * x.coords.conjugate()};
}

GradedElement KreinAlgebra::star(const GradedElement& x) const { return alpha(dagger(x)); }

double KreinAlgebra::norm(const GradedElement& x) const {
  return linalg::operator_norm(to_matrix(x));
}

GradedElement KreinAlgebra::even_part(const GradedElement& x) const {
  return {0.5 * (x.coords + alpha_map_ * x.coords)};
}

GradedElement KreinAlgebra::odd_part(const GradedElement& x) const {
  return {0.5 * (x.coords - alpha_map_ * x.coords)};
}

Eigen::Index KreinAlgebra::span_rank(const Matrix& coord_columns) const {
  if (coord_columns.cols() == 0) return 0;
  return linalg::rank(frame_ * coord_columns, tol_);
}

KreinAlgebra build_function_algebra(int points) {
  if (points < 1) throw std::invalid_argument("function algebra needs at least one point");
  const Eigen::Index n = 2 * points;
  std::vector<Matrix> basis;
  basis.reserve(n);
  Matrix symmetry = Matrix::Zero(n, n);
  Vector generator = Vector::Zero(n);
  for (Eigen::Index p = 0; p < points; ++p) {
    Matrix even = Matrix::Zero(n, n);
    even(2 * p, 2 * p) = 1.0;
    even(2 * p + 1, 2 * p + 1) = 1.0;
    Matrix odd = Matrix::Zero(n, n);
    odd(2 * p, 2 * p + 1) = 1.0;
    odd(2 * p + 1, 2 * p) = 1.0;
    basis.push_back(std::move(even));
    basis.push_back(std::move(odd));
    symmetry(2 * p, 2 * p) = 1.0;
    symmetry(2 * p + 1, 2 * p + 1) = -1.0;
    generator(2 * p + 1) = 1.0;
  }
  return KreinAlgebra::from_matrices(std::move(basis), std::move(symmetry), generator);
}

KreinAlgebra conjugate(const KreinAlgebra& a, const Matrix& unitary) {
  std::vector<Matrix> basis;
  basis.reserve(a.basis().size());
  for (const Matrix& b : a.basis()) basis.push_back(unitary * b * unitary.adjoint());
  Matrix symmetry = unitary * a.symmetry() * unitary.adjoint();
  std::optional<Vector> gen;
  if (a.odd_generator()) gen = a.odd_generator()->coords;
  return KreinAlgebra::from_matrices(std::move(basis), std::move(symmetry), gen, a.tolerance());
}

GradedElement function_element(std::span<const KElem> values) {
  Vector c(2 * static_cast<Eigen::Index>(values.size()));
  for (std::size_t p = 0; p < values.size(); ++p) {
    c(2 * p) = values[p].a;
    c(2 * p + 1) = values[p].b;
  }
  return {c};
}

std::vector<KElem> function_values(const GradedElement& f) {
  std::vector<KElem> out(static_cast<std::size_t>(f.coords.size() / 2));
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = {f.coords(2 * p), f.coords(2 * p + 1)};
  return out;
}

GradedElement dagger(const KreinAlgebra& a, const GradedElement& x) {
  return a.dagger(a.element(x.coords));
}

std::pair<GradedElement, GradedElement> decompose(const KreinAlgebra& a, const GradedElement& x) {
  const GradedElement checked = a.element(x.coords);
  return {a.even_part(checked), a.odd_part(checked)};
}

bool is_odd(const KreinAlgebra& a, const GradedElement& x) {
  return a.norm(a.even_part(x)) <= a.tolerance() * std::max(1.0, a.norm(x));
}

bool is_even(const KreinAlgebra& a, const GradedElement& x) {
  return a.norm(a.odd_part(x)) <= a.tolerance() * std::max(1.0, a.norm(x));
}

InnerProducts inner_products(const KreinAlgebra& a, const GradedElement& x,
                             const GradedElement& y) {
  const GradedElement cx = a.element(x.coords);
  const GradedElement cy = a.element(y.coords);
  if (!is_odd(a, cx) || !is_odd(a, cy))
    throw NotOddError("inner products are defined on the odd part only");
  return {a.mul(cx, a.dagger(cy)), a.mul(a.dagger(cx), cy)};
}

Eigen::Index fullness_rank(const KreinAlgebra& a) {
  const Matrix& odd = a.odd_basis();
  const Eigen::Index k = odd.cols();
  Matrix products(a.dim(), k * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const GradedElement xi_dag = a.dagger(GradedElement{odd.col(i)});
    for (Eigen::Index j = 0; j < k; ++j)
      products.col(i * k + j) = a.mul(xi_dag, GradedElement{odd.col(j)}).coords;
  }
  return a.span_rank(products);
}

bool check_full(const KreinAlgebra& a) { return fullness_rank(a) == a.even_dim(); }

namespace {

bool commute(const KreinAlgebra& a, const GradedElement& x, const GradedElement& y) {
  const GradedElement xy = a.mul(x, y);
  const GradedElement yx = a.mul(y, x);
  return a.distance(xy, yx) <= a.tolerance() * std::max(1.0, a.norm(xy));
}

}  // namespace

CommutativityVerdict check_commutative_symmetric(const KreinAlgebra& a) {
  CommutativityVerdict v;
  v.commutative = true;
  for (Eigen::Index i = 0; i < a.dim() && v.commutative; ++i)
    for (Eigen::Index j = i + 1; j < a.dim() && v.commutative; ++j)
      v.commutative = commute(a, a.basis_element(i), a.basis_element(j));

  const Matrix& even = a.even_basis();
  const Matrix& odd = a.odd_basis();
  bool ok = true;
  for (Eigen::Index i = 0; i < even.cols() && ok; ++i)
    for (Eigen::Index j = i + 1; j < even.cols() && ok; ++j)
      ok = commute(a, GradedElement{even.col(i)}, GradedElement{even.col(j)});
  for (Eigen::Index i = 0; i < even.cols() && ok; ++i)
    for (Eigen::Index j = 0; j < odd.cols() && ok; ++j)
      ok = commute(a, GradedElement{even.col(i)}, GradedElement{odd.col(j)});
  for (Eigen::Index i = 0; i < odd.cols() && ok; ++i) {
    for (Eigen::Index j = 0; j < odd.cols() && ok; ++j) {
      const GradedElement x{odd.col(i)};
      const GradedElement y{odd.col(j)};
      const GradedElement left = a.mul(x, a.dagger(y));   // left<x|y>
      const GradedElement right = a.mul(a.dagger(y), x);  // right<y|x>
      ok = a.distance(left, right) <= a.tolerance() * std::max(1.0, a.norm(left));
    }
  }
  v.symmetric_bimodule = ok;
  return v;
}

GradedElement apply_odd_symmetry(const KreinAlgebra& a, const GradedElement& x) {
  if (!a.odd_generator()) throw MissingOddGeneratorError("algebra has no odd generator");
  return a.mul(*a.odd_generator(), x);
}

OddSymmetryVerdict check_odd_symmetry(const KreinAlgebra& a, int samples, std::uint64_t seed) {
  OddSymmetryVerdict v;
  if (!a.odd_generator()) return v;
  const GradedElement& e = *a.odd_generator();
  const double tol = a.tolerance();
  auto small = [&](const GradedElement& r, double scale) {
    return a.norm(r) <= tol * std::max(1.0, scale);
  };

  bool ok = is_odd(a, e);
  ok = ok && small(a.mul(e, e) - a.unit(), 1.0);
  ok = ok && small(a.star(e) + e, a.norm(e));
  for (Eigen::Index i = 0; i < a.dim() && ok; ++i) {
    const GradedElement x = a.basis_element(i);
    const double scale = a.norm(x) * a.norm(e);
    // eps o alpha = -alpha o eps
    ok = small(a.mul(e, a.alpha(x)) + a.alpha(a.mul(e, x)), scale);
    // eps(x*) = -eps(x)*
    ok = ok && small(a.mul(e, a.star(x)) + a.star(a.mul(e, x)), scale);
    // eps(x y) = x eps(y) needs e central
    ok = ok && small(a.mul(e, x) - a.mul(x, e), scale);
  }
  if (!ok) return v;
  v.exists = true;

  linalg::Rng rng(seed);
  bool isometric = true;
  for (int s = 0; s < samples && isometric; ++s) {
    const GradedElement x = random_element(a, rng);
    const double nx = a.norm(x);
    isometric = std::abs(a.norm(a.mul(e, x)) - nx) <= tol * std::max(1.0, nx);
  }
  v.isometric = isometric;
  return v;
}

GradedElement random_element(const KreinAlgebra& a, std::mt19937_64& rng) {
  return {linalg::random_coords(rng, a.dim())};
}

}  // namespace krein
