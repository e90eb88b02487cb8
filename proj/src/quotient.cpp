#include "krein/quotient.hpp"

#include <algorithm>
#include <cmath>

#include "krein/linalg.hpp"

namespace krein {

namespace {

/// Projector-based membership test for the span of coordinate columns.
class SpanTest {
 public:
  SpanTest(const KreinAlgebra& a, const Matrix& columns)
      : a_(a), q_(linalg::column_space(a.frame() * columns, a.tolerance())) {}

  bool contains(const GradedElement& x) const {
    const Vector v = a_.frame() * x.coords;
    const Vector residual = v - q_ * (q_.adjoint() * v);
    return residual.norm() <= a_.tolerance() * std::max(1.0, v.norm());
  }
  Eigen::Index dim() const { return q_.cols(); }

 private:
  const KreinAlgebra& a_;
  Matrix q_;
};

Matrix independent(const KreinAlgebra& a, const Matrix& columns) {
  const auto keep = linalg::independent_columns(a.frame() * columns, a.tolerance());
  Matrix out(a.dim(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(k) = columns.col(keep[k]);
  return out;
}

}  // namespace

Quotient quotient_by_ideal(const KreinAlgebra& a, const std::vector<GradedElement>& ideal_basis) {
  const Eigen::Index d = a.dim();
  const Eigen::Index n = a.ambient_dim();
  Matrix given(d, static_cast<Eigen::Index>(ideal_basis.size()));
  for (std::size_t k = 0; k < ideal_basis.size(); ++k)
    given.col(k) = a.element(ideal_basis[k].coords).coords;
  const Matrix ideal = independent(a, given);
  const SpanTest in_ideal(a, ideal);

  for (Eigen::Index k = 0; k < ideal.cols(); ++k) {
    const GradedElement j{ideal.col(k)};
    for (Eigen::Index i = 0; i < d; ++i) {
      const GradedElement b = a.basis_element(i);
      if (!in_ideal.contains(a.mul(b, j)) || !in_ideal.contains(a.mul(j, b)))
        throw NotIdealError("span is not a two-sided ideal (basis element " + std::to_string(i) +
                            ")");
    }
  }
  for (Eigen::Index k = 0; k < ideal.cols(); ++k) {
    if (!in_ideal.contains(a.alpha(GradedElement{ideal.col(k)})))
      throw NotAlphaInvariantError("ideal is not invariant under the fundamental symmetry");
  }

  // Range of the ideal acting on C^n; A leaves it and its complement invariant.
  Matrix ranges(n, n * ideal.cols());
  for (Eigen::Index k = 0; k < ideal.cols(); ++k)
    ranges.middleCols(k * n, n) = a.to_matrix(GradedElement{ideal.col(k)});
  const Matrix range = linalg::column_space(ranges, a.tolerance());
  const Matrix complement = linalg::orthogonal_complement(range);
  if (complement.cols() == 0) throw NotIdealError("ideal contains the unit");

  const Eigen::Index m = complement.cols();
  std::vector<Matrix> images;
  images.reserve(static_cast<std::size_t>(d));
  Matrix stacked(m * m, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    images.push_back(complement.adjoint() * a.basis()[static_cast<std::size_t>(i)] * complement);
    stacked.col(i) = linalg::vec(images.back());
  }
  const auto keep = linalg::independent_columns(stacked, a.tolerance());
  if (static_cast<Eigen::Index>(keep.size()) != d - ideal.cols())
    throw NotIdealError("quotient representation has dimension " + std::to_string(keep.size()) +
                        ", expected " + std::to_string(d - ideal.cols()));

  std::vector<Matrix> basis;
  for (auto i : keep) basis.push_back(images[static_cast<std::size_t>(i)]);
  const Matrix symmetry = complement.adjoint() * a.symmetry() * complement;
  KreinAlgebra q = KreinAlgebra::from_matrices(std::move(basis), symmetry, std::nullopt,
                                               a.tolerance());

  Matrix map(q.dim(), d);
  for (Eigen::Index i = 0; i < d; ++i)
    map.col(i) = q.element(images[static_cast<std::size_t>(i)]).coords;
  if (a.odd_generator()) q = q.with_odd_generator(Vector(map * a.odd_generator()->coords));
  return Quotient{std::move(q), std::move(map)};
}

std::vector<GradedElement> character_ideal(const KreinAlgebra& a, const Vector& omega_values) {
  const Matrix& even = a.even_basis();
  if (omega_values.size() != even.cols())
    throw std::invalid_argument("character values do not match the even basis");
  const Matrix kernel = even * linalg::null_space(omega_values.transpose(), a.tolerance());
  const Matrix& odd = a.odd_basis();

  Matrix all(a.dim(), kernel.cols() + odd.cols() * kernel.cols());
  all.leftCols(kernel.cols()) = kernel;
  Eigen::Index col = kernel.cols();
  for (Eigen::Index i = 0; i < odd.cols(); ++i)
    for (Eigen::Index k = 0; k < kernel.cols(); ++k)
      all.col(col++) = a.mul(GradedElement{odd.col(i)}, GradedElement{kernel.col(k)}).coords;

  const Matrix basis = independent(a, all);
  std::vector<GradedElement> out;
  for (Eigen::Index k = 0; k < basis.cols(); ++k) out.push_back({basis.col(k)});
  return out;
}

Eigen::Matrix<Complex, 2, Eigen::Dynamic> rank_one_isomorphism(const KreinAlgebra& a) {
  if (a.dim() != 2 || a.even_dim() != 1 || a.odd_dim() != 1)
    throw InvalidAlgebraError("algebra is not rank-one");
  GradedElement e;
  if (a.odd_generator()) {
    e = *a.odd_generator();
  } else {
    const GradedElement o{a.odd_basis().col(0)};
    // o^2 is even, hence a multiple of the unit.
    const GradedElement sq = a.mul(o, o);
    const Complex beta = a.unit().coords.dot(sq.coords) / a.unit().coords.squaredNorm();
    e = (1.0 / std::sqrt(beta)) * o;
  }
  Eigen::Matrix2cd frame;
  frame.col(0) = a.unit().coords;
  frame.col(1) = e.coords;
  return frame.inverse();
}

}  // namespace krein
