#pragma once

// Finite-dimensional Krein C*-algebras represented inside M_n(C).
//
// An algebra is a span of basis matrices closed under product and adjoint,
// together with a unitary U with U^2 = I. The fundamental symmetry is
// alpha(x) = U x U, the C*-involution is the ambient adjoint (dagger), the
// Krein involution is x* = alpha(x^dagger) and the norm is the operator norm.
// Elements are coordinate vectors against the declared basis.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "krein/kalgebra.hpp"
#include "krein/types.hpp"

namespace krein {

/// Element of a KreinAlgebra as coordinates in its basis.
struct GradedElement {
  Vector coords;

  friend GradedElement operator+(const GradedElement& x, const GradedElement& y) {
    return {x.coords + y.coords};
  }
  friend GradedElement operator-(const GradedElement& x, const GradedElement& y) {
    return {x.coords - y.coords};
  }
  friend GradedElement operator*(Complex c, const GradedElement& x) { return {c * x.coords}; }
};

class KreinAlgebra {
 public:
  /// Validates closure, the symmetry and linear independence, and derives the
  /// unit. Throws InvalidAlgebraError with a message naming the failed property.
  static KreinAlgebra from_matrices(std::vector<Matrix> basis, Matrix symmetry,
                                    std::optional<Vector> odd_generator = std::nullopt,
                                    double tol = kSpanTol);

  Eigen::Index ambient_dim() const noexcept { return n_; }
  Eigen::Index dim() const noexcept { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<Matrix>& basis() const noexcept { return basis_; }
  const Matrix& symmetry() const noexcept { return symmetry_; }
  const std::optional<GradedElement>& odd_generator() const noexcept { return odd_generator_; }
  double tolerance() const noexcept { return tol_; }

  /// Copy with a different odd generator (coordinates), or none.
  KreinAlgebra with_odd_generator(std::optional<Vector> generator) const;

  GradedElement unit() const { return unit_; }
  GradedElement zero() const { return {Vector::Zero(dim())}; }
  GradedElement basis_element(Eigen::Index i) const;

  /// Coordinates of an ambient matrix; throws OutsideSpanError if the
  /// least-squares residual exceeds the tolerance.
  GradedElement element(const Matrix& ambient) const;
  /// Checks the coordinate count; throws OutsideSpanError on mismatch.
  GradedElement element(Vector coords) const;
  Matrix to_matrix(const GradedElement& x) const;
  /// Least-squares residual of an ambient matrix against the span.
  double span_residual(const Matrix& ambient) const;

  GradedElement mul(const GradedElement& x, const GradedElement& y) const;
  GradedElement alpha(const GradedElement& x) const;
  /// The C*-involution x -> alpha(x)* (the ambient adjoint).
  GradedElement dagger(const GradedElement& x) const;
  /// The Krein involution x -> alpha(x^dagger).
  GradedElement star(const GradedElement& x) const;
  double norm(const GradedElement& x) const;
  /// Frobenius norm of the ambient matrix; a cheap upper bound for norm().
  double frobenius(const GradedElement& x) const { return (frame_ * x.coords).norm(); }
  /// Operator norm of x - y.
  double distance(const GradedElement& x, const GradedElement& y) const {
    return norm(x - y);
  }

  GradedElement even_part(const GradedElement& x) const;
  GradedElement odd_part(const GradedElement& x) const;

  /// Basis of the even (odd) part as coordinate columns, selected from the
  /// projections of the declared basis elements.
  const Matrix& even_basis() const noexcept { return even_basis_; }
  const Matrix& odd_basis() const noexcept { return odd_basis_; }
  Eigen::Index even_dim() const noexcept { return even_basis_.cols(); }
  Eigen::Index odd_dim() const noexcept { return odd_basis_.cols(); }

  /// Rank of a set of coordinate columns measured in the Frobenius geometry
  /// of the ambient matrices, so the answer does not depend on basis scaling.
  Eigen::Index span_rank(const Matrix& coord_columns) const;

  /// Maps coordinates to an orthonormal frame of the span (Frobenius inner product).
  const Matrix& frame() const noexcept { return frame_; }

 private:
  KreinAlgebra() = default;

  Eigen::Index n_ = 0;
  double tol_ = kSpanTol;
  std::vector<Matrix> basis_;
  Matrix symmetry_;
  Matrix q_;                      // orthonormal basis of vec(span), n^2 x d
  Matrix frame_;                  // R factor: coords -> q_ coefficients
  std::vector<Matrix> left_mul_;  // left_mul_[i] * y = coords(B_i y)
  Matrix adjoint_map_;            // column i = coords(B_i^dagger)
  Matrix alpha_map_;              // column i = coords(U B_i U)
  GradedElement unit_;
  std::optional<GradedElement> odd_generator_;
  Matrix even_basis_;
  Matrix odd_basis_;

  Vector project(const Matrix& ambient, double* residual) const;
};

/// C(X, K) for |X| = points, block diagonal in 2N x 2N matrices. Basis order
/// is a_0, b_0, a_1, b_1, ... where a_p (b_p) is T(1,0) (T(0,1)) at point p.
/// The odd generator is the constant function T(0,1). Throws std::invalid_argument
/// for points == 0.
KreinAlgebra build_function_algebra(int points);

/// Same algebra conjugated by a unitary W: B -> W B W^dagger, U -> W U W^dagger.
/// Coordinates (and the odd generator) are unchanged.
KreinAlgebra conjugate(const KreinAlgebra& a, const Matrix& unitary);

/// Coordinates in build_function_algebra(values.size()) of the function p -> values[p].
GradedElement function_element(std::span<const KElem> values);
/// Inverse of function_element.
std::vector<KElem> function_values(const GradedElement& f);

GradedElement dagger(const KreinAlgebra& a, const GradedElement& x);

/// Unique split x = even + odd with alpha(even) = even, alpha(odd) = -odd.
std::pair<GradedElement, GradedElement> decompose(const KreinAlgebra& a, const GradedElement& x);

/// True if x lies in the odd part (even component below tolerance).
bool is_odd(const KreinAlgebra& a, const GradedElement& x);
bool is_even(const KreinAlgebra& a, const GradedElement& x);

struct InnerProducts {
  GradedElement left;   // x y^dagger
  GradedElement right;  // x^dagger y
};

/// A_+-valued inner products on the odd part. Throws NotOddError unless both
/// arguments are odd.
InnerProducts inner_products(const KreinAlgebra& a, const GradedElement& x,
                             const GradedElement& y);

/// Dimension of span{ x^dagger y : x, y in an odd basis }.
Eigen::Index fullness_rank(const KreinAlgebra& a);
/// True if the right inner products of the odd part span the even part.
bool check_full(const KreinAlgebra& a);

struct CommutativityVerdict {
  bool commutative = false;
  /// Even part commutative and the odd part a symmetric C*-bimodule over it.
  bool symmetric_bimodule = false;
};

CommutativityVerdict check_commutative_symmetric(const KreinAlgebra& a);

struct OddSymmetryVerdict {
  bool exists = false;
  /// Empty when there is no valid generator to test.
  std::optional<bool> isometric;
};

/// Verifies the supplied odd generator e: e odd, e^2 = 1, e* = -e, and that
/// x -> e x anticommutes with alpha and satisfies eps(x*) = -eps(x)*. When
/// those hold, isometry is sampled on `samples` seeded random elements.
OddSymmetryVerdict check_odd_symmetry(const KreinAlgebra& a, int samples = 100,
                                      std::uint64_t seed = 42);

/// x -> e x for the algebra's odd generator. Throws MissingOddGeneratorError.
GradedElement apply_odd_symmetry(const KreinAlgebra& a, const GradedElement& x);

/// Random element with coordinates drawn from the unit disk.
GradedElement random_element(const KreinAlgebra& a, std::mt19937_64& rng);

}  // namespace krein
