#pragma once

// The rank-one Krein C*-algebra K = { T(a,b) = [[a,b],[b,a]] } and the
// two-dimensional deformed family used to classify rank-one algebras.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "krein/types.hpp"

namespace krein {

/// Element T(a,b) of K; `a` is the even coordinate, `b` the odd one.
struct KElem {
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};

  static KElem unit() { return {Complex(1.0, 0.0), Complex(0.0, 0.0)}; }
  static KElem generator() { return {Complex(0.0, 0.0), Complex(1.0, 0.0)}; }

  friend KElem operator+(const KElem& x, const KElem& y) { return {x.a + y.a, x.b + y.b}; }
  friend KElem operator-(const KElem& x, const KElem& y) { return {x.a - y.a, x.b - y.b}; }
  friend KElem operator-(const KElem& x) { return {-x.a, -x.b}; }
  friend KElem operator*(Complex c, const KElem& x) { return {c * x.a, c * x.b}; }
  friend bool operator==(const KElem&, const KElem&) = default;
};

KElem k_mul(const KElem& x, const KElem& y);
/// Krein involution: T(a,b)* = T(conj a, -conj b).
KElem k_star(const KElem& x);
/// Fundamental symmetry: T(a,b) -> T(a,-b).
KElem k_gamma(const KElem& x);
/// Odd symmetry: T(a,b) -> T(b,a).
KElem k_epsilon(const KElem& x);
/// Operator norm of [[a,b],[b,a]], i.e. max(|a+b|, |a-b|).
double k_norm(const KElem& x);

/// Matrix adjoint T(a,b)^dagger = T(conj a, conj b) = gamma(x*).
inline KElem k_dagger(const KElem& x) { return k_gamma(k_star(x)); }

/// Unital *-automorphism of K, phi(T(a,b)) = T(a, sign * b).
struct KAutomorphism {
  int sign = 1;

  KElem operator()(const KElem& x) const { return {x.a, static_cast<double>(sign) * x.b}; }
  /// Image of the odd generator e = T(0,1).
  KElem image_of_generator() const { return (*this)(KElem::generator()); }
  std::string name() const { return sign > 0 ? "identity" : "gamma"; }
  KAutomorphism compose(const KAutomorphism& inner) const { return {sign * inner.sign}; }
  friend bool operator==(const KAutomorphism&, const KAutomorphism&) = default;
};

/// Residuals of the two constraints a unital *-endomorphism imposes on the
/// image T(a,b) of the generator: phi(e)^2 = 1 and phi(e*) = -phi(e).
double automorphism_constraint_residual(const KElem& generator_image);

/// All unital *-automorphisms of K, obtained by solving the generator
/// constraints in closed form. Always {identity, gamma}.
std::vector<KAutomorphism> k_automorphisms();

/// Element m*1 + n*e of the deformed algebra.
struct DeformedElem {
  Complex m{0.0, 0.0};
  Complex n{0.0, 0.0};
};

/// The family with e*e = exp(i theta) and e* = sign * exp(-i theta) e.
class DeformedAlgebra {
 public:
  /// theta in [0, 2 pi), sign in {+1, -1}. exp(i theta) is exact when theta
  /// is a multiple of pi/2.
  DeformedAlgebra(double theta, int sign);

  double theta() const noexcept { return theta_; }
  int sign() const noexcept { return sign_; }

  DeformedElem mul(const DeformedElem& x, const DeformedElem& y) const;
  DeformedElem star(const DeformedElem& x) const;
  /// Candidate fundamental symmetry m + n e -> m - n e.
  DeformedElem grading(const DeformedElem& x) const;
  /// The asserted norm max(|m+n|, |m-n|).
  double norm(const DeformedElem& x) const;
  /// Operator norm of left multiplication on C^2 in the basis {1, e};
  /// comparison oracle only.
  double regular_norm(const DeformedElem& x) const;

 private:
  double theta_;
  int sign_;
  Complex square_;  // e*e
};

struct DeformedWitness {
  enum class Kind { Submultiplicativity, KreinIdentity };
  Kind kind = Kind::Submultiplicativity;
  DeformedElem x;
  DeformedElem y;
  double lhs = 0.0;  // ||xy|| or ||gamma(x*) x||
  double rhs = 0.0;  // ||x|| ||y|| or ||x||^2
};

struct DeformedVerdict {
  bool is_banach = true;
  bool is_krein = true;
  /// First violation found: submultiplicativity first, then the Krein identity.
  std::optional<DeformedWitness> witness;
  std::optional<DeformedWitness> banach_witness;
  std::optional<DeformedWitness> krein_witness;
  /// Largest |norm - regular_norm| seen on the samples.
  double regular_norm_discrepancy = 0.0;
};

/// Tests submultiplicativity and the Krein identity under the grading on the
/// element i*1 + e followed by `samples` seeded draws from the unit disk.
DeformedVerdict deformed_check(const DeformedAlgebra& alg, int samples, std::uint64_t seed,
                               double tol = kExactTol);

}  // namespace krein
