#pragma once

// Characters and the Gelfand transform of commutative symmetric imprimitive
// Krein C*-algebras.
//
// Characters of the even part are found by joint diagonalization; each one
// extends to a unique even character w(x) = T(omega(x_+), omega(e x_-)), and
// its class {w, gamma o w} is a point of the spectrum.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "krein/finite_krein.hpp"
#include "krein/kalgebra.hpp"
#include "krein/report.hpp"

namespace krein {

/// Character of the even part; values on the columns of even_basis().
struct EvenCharacter {
  Vector values;
};

/// Character A -> K; values on the declared basis of A.
struct Character {
  std::vector<KElem> values;

  KElem operator()(const GradedElement& x) const;
};

struct SpectrumClass {
  EvenCharacter even;
  Character even_rep;  // satisfies eps_K o w o eps = w
  Character partner;   // gamma o even_rep
};

/// gamma o w.
Character compose_gamma(const Character& w);

/// All characters of the even part, sorted in descending lexicographic order
/// of their values. Throws NotCommutativeError if the even part does not
/// commute and ClusteringError if no random combination separates the joint
/// eigenspaces within the retry limit.
std::vector<EvenCharacter> even_characters(const KreinAlgebra& a, std::uint64_t seed = 42);

/// Even character extending omega. Throws MissingOddGeneratorError.
Character extend_character(const KreinAlgebra& a, const EvenCharacter& omega);

/// Largest residual of the character axioms over basis elements: products,
/// unit, Krein involution and w o alpha = gamma o w.
double character_residual(const KreinAlgebra& a, const Character& w);
/// Largest multiplicativity, unit and involution residual of omega on the even basis.
double even_character_residual(const KreinAlgebra& a, const EvenCharacter& omega);
/// max_i ||eps_K(w(e B_i)) - w(B_i)||; zero exactly for even characters.
double evenness_defect(const KreinAlgebra& a, const Character& w);

std::vector<SpectrumClass> spectrum_classes(const KreinAlgebra& a, std::uint64_t seed = 42);

/// The transform x -> (class k -> even_rep_k(x)) as a linear map of coordinates.
class GelfandTransform {
 public:
  GelfandTransform(const KreinAlgebra& a, std::vector<SpectrumClass> classes);

  const std::vector<SpectrumClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  /// 2m x d; row 2k (2k+1) is the even (odd) coordinate at class k. Columns
  /// are also the coordinates in build_function_algebra(m).
  const Matrix& matrix() const noexcept { return matrix_; }

  std::vector<KElem> operator()(const GradedElement& x) const;
  /// Coordinates of x-hat in build_function_algebra(size()).
  GradedElement to_function(const GradedElement& x) const { return {matrix_ * x.coords}; }
  /// Least-squares preimage of a function given in build_function_algebra coordinates.
  GradedElement preimage(const GradedElement& f) const;

 private:
  std::vector<SpectrumClass> classes_;
  Matrix matrix_;
};

std::vector<KElem> gelfand(const KreinAlgebra& a, const std::vector<SpectrumClass>& classes,
                           const GradedElement& x);

double sup_norm(const std::vector<KElem>& f);

struct SpectralReport {
  Report report;
  int spectrum_size = 0;
  Eigen::Index rank = 0;
  double condition_number = 0.0;
  std::vector<SpectrumClass> classes;
};

/// Checks that the Gelfand transform is an isometric *-isomorphism onto
/// C(Omega_b, K), using build_function_algebra(|classes|) as the target.
/// Throws PreconditionError naming the first failed hypothesis.
SpectralReport verify_spectral_theorem(const KreinAlgebra& a, int samples, std::uint64_t seed,
                                       double tol = kSpanTol);

/// Kernel checks for a character: w(x) = 0 iff w(x^dagger x) = 0,
/// and ker(w) = ker(gamma o w).
Report kernel_lemma_checks(const KreinAlgebra& a, const Character& w, int samples,
                           std::uint64_t seed = 42, double tol = kCharacterTol);

struct QuotientConnection {
  Eigen::Index quotient_dim = 0;
  bool rank_one = false;
  /// Largest *-homomorphism / isometry residual of the quotient's map onto K.
  double isomorphism_residual = 0.0;
  /// Largest difference between (A -> A/I -> K) and extend_character(omega).
  double induced_map_residual = 0.0;
};

/// Quotients A by the ideal attached to omega and compares the induced map
/// to K with the extension of omega.
QuotientConnection quotient_connection(const KreinAlgebra& a, const EvenCharacter& omega,
                                       int samples = 20, std::uint64_t seed = 42);

nlohmann::json to_json(const Character& w);
nlohmann::json to_json(const SpectralReport& r);

}  // namespace krein
