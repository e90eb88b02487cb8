// Randomized invariants over seeds and sizes. Each loop draws fresh
// instances and elements from a seeded generator, so failures reproduce.

#include <doctest.h>

#include "fixtures.hpp"
#include "krein/spectrum.hpp"

using namespace krein;

namespace {

constexpr double kTol = 1e-9;

struct Case {
  int points;
  std::uint64_t seed;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    for (int n : {1, 2, 3, 5}) out.push_back({n, seed * 97 + static_cast<std::uint64_t>(n)});
  return out;
}

}  // namespace

TEST_CASE("involutions, grading and norm identities") {
  for (const Case& c : cases()) {
    const KreinAlgebra a = fixtures::conjugated(c.points, c.seed);
    linalg::Rng rng(c.seed);
    for (int s = 0; s < 10; ++s) {
      const GradedElement x = random_element(a, rng), y = random_element(a, rng);
      const double nx = a.norm(x), ny = a.norm(y);
      const double scale = 1 + nx * ny;
      CAPTURE(c.points);
      CAPTURE(c.seed);
      CHECK(a.distance(a.alpha(a.alpha(x)), x) <= kTol);
      CHECK(a.distance(a.alpha(a.mul(x, y)), a.mul(a.alpha(x), a.alpha(y))) <= kTol * scale);
      CHECK(a.distance(a.star(a.star(x)), x) <= kTol);
      CHECK(a.distance(a.star(a.mul(x, y)), a.mul(a.star(y), a.star(x))) <= kTol * scale);
      CHECK(a.distance(a.dagger(x), a.alpha(a.star(x))) <= kTol);
      CHECK(std::abs(a.norm(a.mul(a.dagger(x), x)) - nx * nx) <= kTol * (1 + nx * nx));
      CHECK(std::abs(a.norm(a.mul(a.alpha(a.star(x)), x)) - nx * nx) <= kTol * (1 + nx * nx));
      CHECK(a.norm(a.mul(x, y)) <= nx * ny + kTol * scale);
      CHECK(std::abs(a.norm(a.alpha(x)) - nx) <= kTol * (1 + nx));

      const auto [ev, od] = decompose(a, x);
      CHECK(a.distance(ev + od, x) <= kTol);
      CHECK(is_even(a, ev));
      CHECK(is_odd(a, od));
      CHECK(is_odd(a, a.mul(ev, a.odd_part(y))));
      CHECK(is_even(a, a.mul(od, a.odd_part(y))));

      const GradedElement ex = apply_odd_symmetry(a, x);
      CHECK(std::abs(a.norm(ex) - nx) <= kTol * (1 + nx));
      CHECK(a.distance(apply_odd_symmetry(a, a.star(x)), -1.0 * a.star(ex)) <= kTol * (1 + nx));
      CHECK(a.distance(a.alpha(ex), -1.0 * apply_odd_symmetry(a, a.alpha(x))) <= kTol * (1 + nx));
    }
  }
}

TEST_CASE("bimodule inner products") {
  for (const Case& c : cases()) {
    const KreinAlgebra a = fixtures::conjugated(c.points, c.seed);
    linalg::Rng rng(c.seed + 1);
    for (int s = 0; s < 8; ++s) {
      const GradedElement x = a.odd_part(random_element(a, rng));
      const GradedElement y = a.odd_part(random_element(a, rng));
      const GradedElement z = a.odd_part(random_element(a, rng));
      const InnerProducts xy = inner_products(a, x, y), yz = inner_products(a, y, z);
      const double nx = a.norm(x);
      // Imprimitivity: <x|y>_left z = x <y|z>_right.
      CHECK(a.distance(a.mul(xy.left, z), a.mul(x, yz.right)) <= kTol);
      CHECK(is_even(a, xy.left));
      CHECK(is_even(a, xy.right));
      // Norms induced by either inner product agree with the algebra norm.
      const InnerProducts xx = inner_products(a, x, x);
      CHECK(std::abs(a.norm(xx.left) - nx * nx) <= kTol * (1 + nx * nx));
      CHECK(std::abs(a.norm(xx.right) - nx * nx) <= kTol * (1 + nx * nx));
      // Symmetric bimodule: left and right actions of the even part agree.
      const GradedElement b = a.even_part(random_element(a, rng));
      CHECK(a.distance(a.mul(b, x), a.mul(x, b)) <= kTol);
    }
  }
}

TEST_CASE("conjugation preserves norms and the spectrum") {
  for (const Case& c : cases()) {
    const KreinAlgebra base = build_function_algebra(c.points);
    const KreinAlgebra conj = fixtures::conjugated(c.points, c.seed);
    linalg::Rng rng(c.seed + 2);
    for (int s = 0; s < 10; ++s) {
      const GradedElement x = random_element(base, rng);
      CHECK(std::abs(base.norm(x) - conj.norm(x)) <= kTol);
    }
    CHECK(spectrum_classes(conj).size() == static_cast<std::size_t>(c.points));
  }
}

TEST_CASE("the Gelfand transform is multiplicative, isometric and intertwines the symmetries") {
  for (const Case& c : cases()) {
    const KreinAlgebra a = fixtures::conjugated(c.points, c.seed);
    const auto classes = spectrum_classes(a, c.seed);
    linalg::Rng rng(c.seed + 3);
    for (int s = 0; s < 10; ++s) {
      const GradedElement x = random_element(a, rng), y = random_element(a, rng);
      const auto fx = gelfand(a, classes, x), fy = gelfand(a, classes, y);
      const auto fxy = gelfand(a, classes, a.mul(x, y));
      const auto fstar = gelfand(a, classes, a.star(x));
      const auto falpha = gelfand(a, classes, a.alpha(x));
      const auto feps = gelfand(a, classes, apply_odd_symmetry(a, x));
      for (std::size_t k = 0; k < classes.size(); ++k) {
        CHECK(k_norm(fxy[k] - k_mul(fx[k], fy[k])) <= kTol);
        CHECK(k_norm(fstar[k] - k_star(fx[k])) <= kTol);
        CHECK(k_norm(falpha[k] - k_gamma(fx[k])) <= kTol);
        CHECK(k_norm(feps[k] - k_epsilon(fx[k])) <= kTol);
      }
      CHECK(std::abs(sup_norm(fx) - a.norm(x)) <= kTol);
    }
  }
}

TEST_CASE("characters are stable under the clustering seed") {
  for (const Case& c : cases()) {
    const KreinAlgebra a = fixtures::conjugated(c.points, c.seed);
    const auto first = even_characters(a, 1);
    const auto second = even_characters(a, 999);
    REQUIRE(first.size() == second.size());
    for (std::size_t k = 0; k < first.size(); ++k)
      CHECK((first[k].values - second[k].values).norm() <= 1e-8);
  }
}
