#pragma once

#include <vector>

#include "krein/finite_krein.hpp"

namespace krein {

/// Quotient A/I represented faithfully on the orthogonal complement of the
/// ideal's range, together with the quotient map in coordinates.
struct Quotient {
  KreinAlgebra algebra;
  /// Column j holds the quotient coordinates of the image of basis element j.
  Matrix map;

  GradedElement apply(const GradedElement& x) const { return {map * x.coords}; }
};

/// Quotient of A by the two-sided ideal spanned by `ideal_basis`.
/// Throws NotIdealError if the span is not a two-sided ideal and
/// NotAlphaInvariantError if alpha does not preserve it. The odd generator,
/// when present, is carried to its image.
Quotient quotient_by_ideal(const KreinAlgebra& a, const std::vector<GradedElement>& ideal_basis);

/// Ideal I = I_+ + I_- attached to a character of the even part:
/// I_+ = ker(omega) and I_- = span{ x k : x odd, k in ker(omega) }.
/// `omega_values` are the character's values on a.even_basis().
std::vector<GradedElement> character_ideal(const KreinAlgebra& a, const Vector& omega_values);

/// Isomorphism of a rank-one algebra onto K, as a 2 x d matrix whose rows are
/// the even and odd coordinates. Uses the odd generator when present;
/// otherwise normalizes an odd basis vector so that e^2 = 1.
/// Throws InvalidAlgebraError if the algebra is not rank-one.
Eigen::Matrix<Complex, 2, Eigen::Dynamic> rank_one_isomorphism(const KreinAlgebra& a);

}  // namespace krein
