#include "krein/kalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "krein/linalg.hpp"

namespace krein {

KElem k_mul(const KElem& x, const KElem& y) {
  return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a};
}

KElem k_star(const KElem& x) { return {std::conj(x.a), -std::conj(x.b)}; }

KElem k_gamma(const KElem& x) { return {x.a, -x.b}; }

KElem k_epsilon(const KElem& x) { return {x.b, x.a}; }

double k_norm(const KElem& x) { return std::max(std::abs(x.a + x.b), std::abs(x.a - x.b)); }

double automorphism_constraint_residual(const KElem& image) {
  const KElem square = k_mul(image, image) - KElem::unit();
  const KElem star_rule = k_star(image) + image;
  return std::max({std::abs(square.a), std::abs(square.b), std::abs(star_rule.a),
                   std::abs(star_rule.b)});
}

std::vector<KAutomorphism> k_automorphisms() {
  // A unital *-endomorphism is fixed by the image T(a,b) of e = T(0,1):
  //   T(a,b)^2 = T(1,0)     <=>  a^2 + b^2 = 1  and  2ab = 0
  //   T(a,b)*  = -T(a,b)    <=>  conj(a) = -a   and  conj(b) = b
  // The product equation splits into the branches a = 0 and b = 0.
  std::vector<KElem> candidates;

  // Branch a = 0: b^2 = 1.
  for (double root : {1.0, -1.0}) candidates.push_back({Complex(0.0), Complex(root)});
  // Branch b = 0: a^2 = 1, so a = +-1, which is real and therefore violates
  // conj(a) = -a. Kept as candidates so the rejection is explicit.
  for (double root : {1.0, -1.0}) candidates.push_back({Complex(root), Complex(0.0)});

  std::vector<KAutomorphism> result;
  for (const KElem& c : candidates) {
    const bool a_imaginary = std::conj(c.a) == -c.a;
    const bool b_real = std::conj(c.b) == c.b;
    if (!a_imaginary || !b_real) continue;
    if (automorphism_constraint_residual(c) != 0.0) continue;
    // Every solution has a = 0 and b = +-1, i.e. phi(T(a,b)) = T(a, +-b).
    result.push_back({c.b.real() > 0.0 ? 1 : -1});
  }
  return result;
}

DeformedAlgebra::DeformedAlgebra(double theta, int sign) : theta_(theta), sign_(sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (!(theta >= 0.0 && theta < 2.0 * std::numbers::pi))
    throw std::invalid_argument("theta must lie in [0, 2 pi)");
  const double quarter_turns = theta / (std::numbers::pi / 2.0);
  const double nearest = std::round(quarter_turns);
  if (std::abs(quarter_turns - nearest) < 1e-12) {
    static constexpr Complex kQuarter[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    square_ = kQuarter[static_cast<int>(nearest) % 4];
  } else {
    square_ = std::polar(1.0, theta);
  }
}

DeformedElem DeformedAlgebra::mul(const DeformedElem& x, const DeformedElem& y) const {
  return {x.m * y.m + square_ * x.n * y.n, x.m * y.n + x.n * y.m};
}

DeformedElem DeformedAlgebra::star(const DeformedElem& x) const {
  // (m + n e)* = conj(m) + conj(n) sign exp(-i theta) e, and exp(-i theta) = conj(e*e).
  return {std::conj(x.m), std::conj(x.n) * static_cast<double>(sign_) * std::conj(square_)};
}

DeformedElem DeformedAlgebra::grading(const DeformedElem& x) const { return {x.m, -x.n}; }

double DeformedAlgebra::norm(const DeformedElem& x) const {
  return std::max(std::abs(x.m + x.n), std::abs(x.m - x.n));
}

double DeformedAlgebra::regular_norm(const DeformedElem& x) const {
  // L_x(1) = m + n e, L_x(e) = n e^2 + m e.
  Eigen::Matrix2cd left;
  left << x.m, x.n * square_, x.n, x.m;
  return linalg::operator_norm(left);
}

namespace {

bool within(double lhs, double rhs, double tol) {
  return lhs <= rhs + tol * std::max(1.0, rhs);
}

}  // namespace

DeformedVerdict deformed_check(const DeformedAlgebra& alg, int samples, std::uint64_t seed,
                               double tol) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  DeformedVerdict verdict;

  auto probe = [&](const DeformedElem& x, const DeformedElem& y) {
    const double nx = alg.norm(x);
    const double ny = alg.norm(y);
    const double nxy = alg.norm(alg.mul(x, y));
    if (verdict.is_banach && !within(nxy, nx * ny, tol)) {
      verdict.is_banach = false;
      verdict.banach_witness =
          DeformedWitness{DeformedWitness::Kind::Submultiplicativity, x, y, nxy, nx * ny};
    }
    const double lhs = alg.norm(alg.mul(alg.grading(alg.star(x)), x));
    const double rhs = nx * nx;
    if (verdict.is_krein && std::abs(lhs - rhs) > tol * std::max(1.0, rhs)) {
      verdict.is_krein = false;
      verdict.krein_witness = DeformedWitness{DeformedWitness::Kind::KreinIdentity, x, x, lhs, rhs};
    }
    verdict.regular_norm_discrepancy =
        std::max(verdict.regular_norm_discrepancy, std::abs(nx - alg.regular_norm(x)));
  };

  const DeformedElem witness{Complex(0.0, 1.0), Complex(1.0, 0.0)};
  probe(witness, witness);

  linalg::Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const DeformedElem x{linalg::random_unit_disk(rng), linalg::random_unit_disk(rng)};
    const DeformedElem y{linalg::random_unit_disk(rng), linalg::random_unit_disk(rng)};
    probe(x, y);
  }

  verdict.witness = verdict.banach_witness ? verdict.banach_witness : verdict.krein_witness;
  return verdict;
}

}  // namespace krein
