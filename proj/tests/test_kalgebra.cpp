#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include <Eigen/Eigenvalues>

#include "krein/kalgebra.hpp"
#include "krein/linalg.hpp"

using namespace krein;

namespace {

const Complex I{0.0, 1.0};

bool close(const KElem& x, const KElem& y, double tol = kExactTol) {
  return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol;
}

// sqrt of the largest eigenvalue of M^dagger M, independent of the SVD used in the library.
double eigen_norm(const KElem& x) {
  Eigen::Matrix2cd m;
  m << x.a, x.b, x.b, x.a;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m.adjoint() * m);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

KElem random_kelem(linalg::Rng& rng) {
  std::normal_distribution<double> g(0.0, 3.0);
  return {Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
}

}  // namespace

TEST_CASE("multiplication matches 2x2 matrix products") {
  CHECK(close(k_mul({1.0, 2.0}, {3.0, 4.0}), KElem{11.0, 10.0}));
  const KElem x{Complex(0.3, -1.0), Complex(2.0, 0.5)};
  CHECK(close(k_mul(x, KElem::unit()), x));
  CHECK(close(k_mul(KElem::generator(), KElem::generator()), KElem::unit()));
}

TEST_CASE("involutions and symmetries on fixed elements") {
  CHECK(close(k_star({I, 1.0 + I}), KElem{-I, -1.0 + I}));
  CHECK(close(k_star(KElem::unit()), KElem::unit()));
  CHECK(close(k_star(KElem::generator()), KElem{0.0, -1.0}));
  const KElem x{Complex(1.5, 2.0), Complex(-0.5, 3.0)};
  CHECK(close(k_gamma(x), KElem{x.a, -x.b}));
  CHECK(close(k_gamma(k_gamma(x)), x));
  CHECK(close(k_epsilon(KElem::generator()), KElem::unit()));
  CHECK(close(k_epsilon(x), KElem{x.b, x.a}));
}

TEST_CASE("norm on fixed elements") {
  CHECK(k_norm({I, 1.0}) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));
  CHECK(k_norm(KElem::unit()) == 1.0);
  CHECK(k_norm({Complex(3.0, 4.0), 0.0}) == doctest::Approx(5.0));
  CHECK(std::abs(k_norm({I, 1.0}) - eigen_norm({I, 1.0})) <= kExactTol);
}

TEST_CASE("norm agrees with an eigenvalue oracle on random elements") {
  linalg::Rng rng(20240601);
  double worst = 0.0;
  for (int s = 0; s < 2000; ++s) {
    const KElem x = random_kelem(rng);
    worst = std::max(worst, std::abs(k_norm(x) - eigen_norm(x)) / std::max(1.0, k_norm(x)));
  }
  CHECK(worst <= kExactTol);
}

TEST_CASE("algebraic identities hold on random elements") {
  linalg::Rng rng(7);
  for (int s = 0; s < 500; ++s) {
    const KElem x = random_kelem(rng), y = random_kelem(rng), z = random_kelem(rng);
    const double scale = 1.0 + k_norm(x) * k_norm(y) * k_norm(z);
    CHECK(close(k_mul(k_mul(x, y), z), k_mul(x, k_mul(y, z)), 1e-12 * scale));
    CHECK(close(k_mul(x, y), k_mul(y, x), 1e-12 * scale));
    CHECK(close(k_star(k_mul(x, y)), k_mul(k_star(y), k_star(x)), 1e-12 * scale));
    CHECK(close(k_star(k_star(x)), x));
    CHECK(close(k_gamma(k_mul(x, y)), k_mul(k_gamma(x), k_gamma(y)), 1e-12 * scale));
    // Krein identity ||gamma(x*) x|| = ||x||^2 and the C*-identity for dagger.
    const double nx = k_norm(x);
    CHECK(std::abs(k_norm(k_mul(k_gamma(k_star(x)), x)) - nx * nx) <= 1e-12 * (1 + nx * nx));
    CHECK(std::abs(k_norm(k_mul(k_dagger(x), x)) - nx * nx) <= 1e-12 * (1 + nx * nx));
    // The odd symmetry is an isometry with eps(x*) = -eps(x)*.
    CHECK(std::abs(k_norm(k_epsilon(x)) - nx) <= 1e-12 * (1 + nx));
    CHECK(close(k_epsilon(k_star(x)), -k_star(k_epsilon(x)), 1e-12 * (1 + nx)));
    CHECK(k_norm(k_mul(x, y)) <= k_norm(x) * k_norm(y) * (1 + 1e-12));
  }
}

TEST_CASE("automorphisms are exactly identity and gamma") {
  const auto autos = k_automorphisms();
  REQUIRE(autos.size() == 2);
  std::set<std::string> names;
  for (const auto& phi : autos) {
    names.insert(phi.name());
    CHECK(automorphism_constraint_residual(phi.image_of_generator()) <= kExactTol);
  }
  CHECK(names == std::set<std::string>{"identity", "gamma"});
  CHECK(autos[0].compose(autos[1]).compose(autos[1]) == autos[0]);
}

TEST_CASE("brute-force enumeration finds only the two automorphisms") {
  // Candidate generator images T(a,b) with a, b on a Gaussian-rational lattice.
  // A candidate defines phi(T(p,q)) = p + q T(a,b); keep it when phi is a
  // unital *-homomorphism on random probes, checked directly.
  linalg::Rng rng(99);
  std::vector<std::pair<KElem, KElem>> probes;
  for (int s = 0; s < 6; ++s) probes.emplace_back(random_kelem(rng), random_kelem(rng));

  std::vector<KElem> found;
  const int r = 6;
  std::vector<Complex> lattice;
  for (int p = -r; p <= r; ++p)
    for (int q = -r; q <= r; ++q) lattice.emplace_back(p / 4.0, q / 4.0);
  for (const Complex& a : lattice)
    for (const Complex& b : lattice) {
      const KElem img{a, b};
      auto phi = [&](const KElem& x) { return KElem{x.a, 0.0} + x.b * img; };
      bool ok = true;
      for (const auto& [x, y] : probes) {
        const double s = 1 + k_norm(x) * k_norm(y);
        if (!close(phi(k_mul(x, y)), k_mul(phi(x), phi(y)), 1e-9 * s) ||
            !close(phi(k_star(x)), k_star(phi(x)), 1e-9 * s)) {
          ok = false;
          break;
        }
      }
      if (ok) found.push_back(img);
    }
  REQUIRE(found.size() == 2);
  for (const auto& phi : k_automorphisms()) {
    const KElem img = phi.image_of_generator();
    const bool matched = close(found[0], img) || close(found[1], img);
    CHECK(matched);
  }
}

TEST_CASE("deformed algebra rejects bad parameters") {
  CHECK_THROWS_AS(DeformedAlgebra(-0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(DeformedAlgebra(2 * std::numbers::pi, 1), std::invalid_argument);
  CHECK_THROWS_AS(DeformedAlgebra(0.0, 0), std::invalid_argument);
}

TEST_CASE("theta = pi is not a Banach algebra, with the exact witness") {
  for (int sign : {1, -1}) {
    const DeformedAlgebra alg(std::numbers::pi, sign);
    const DeformedElem x{I, 1.0};
    const DeformedElem xy = alg.mul(x, x);
    CHECK(std::abs(alg.norm(xy) - 2 * std::numbers::sqrt2) <= kExactTol);
    CHECK(std::abs(alg.norm(x) * alg.norm(x) - 2.0) <= kExactTol);

    const DeformedVerdict v = deformed_check(alg, 100, 42);
    CHECK_FALSE(v.is_banach);
    REQUIRE(v.banach_witness);
    CHECK(std::abs(v.banach_witness->lhs / v.banach_witness->rhs - std::numbers::sqrt2) <=
          kExactTol);
  }
}

TEST_CASE("theta = 0 classification") {
  const DeformedVerdict minus = deformed_check(DeformedAlgebra(0.0, -1), 200, 3);
  CHECK(minus.is_banach);
  CHECK(minus.is_krein);
  CHECK_FALSE(minus.witness);
  CHECK(minus.regular_norm_discrepancy <= 1e-12);

  const DeformedVerdict plus = deformed_check(DeformedAlgebra(0.0, 1), 200, 3);
  CHECK_FALSE(plus.is_krein);
  REQUIRE(plus.krein_witness);
  CHECK(plus.krein_witness->kind == DeformedWitness::Kind::KreinIdentity);
}

TEST_CASE("the minus, theta = 0 algebra is K under e -> T(0,1)") {
  const DeformedAlgebra alg(0.0, -1);
  linalg::Rng rng(5);
  auto f = [](const DeformedElem& x) { return KElem{x.m, x.n}; };
  for (int s = 0; s < 200; ++s) {
    const DeformedElem x{linalg::random_unit_disk(rng), linalg::random_unit_disk(rng)};
    const DeformedElem y{linalg::random_unit_disk(rng), linalg::random_unit_disk(rng)};
    CHECK(close(f(alg.mul(x, y)), k_mul(f(x), f(y))));
    CHECK(close(f(alg.star(x)), k_star(f(x))));
    CHECK(std::abs(alg.norm(x) - k_norm(f(x))) <= kExactTol);
  }
}
