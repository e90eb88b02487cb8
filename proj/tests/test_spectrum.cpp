#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fixtures.hpp"
#include "krein/quotient.hpp"
#include "krein/spectrum.hpp"

using namespace krein;

namespace {

bool close(const KElem& x, const KElem& y, double tol = kCharacterTol) {
  return k_norm(x - y) <= tol;
}

// Evaluation at point p read off the ambient matrix: the 2x2 diagonal block
// of W^dagger X W for the conjugating unitary W.
std::vector<KElem> block_evaluation(const KreinAlgebra& a, const Matrix& w, int p) {
  std::vector<KElem> values;
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    const Matrix m = w.adjoint() * a.basis()[static_cast<std::size_t>(i)] * w;
    values.push_back({m(2 * p, 2 * p), m(2 * p, 2 * p + 1)});
  }
  return values;
}

bool same_character(const std::vector<KElem>& x, const std::vector<KElem>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!close(x[i], y[i])) return false;
  return true;
}

std::vector<KElem> gamma_of(std::vector<KElem> v) {
  for (auto& x : v) x = k_gamma(x);
  return v;
}

}  // namespace

TEST_CASE("even characters of a diagonal algebra") {
  Matrix d1 = Matrix::Identity(2, 2), d2 = Matrix::Identity(2, 2);
  d2(1, 1) = 2.0;
  const KreinAlgebra a = KreinAlgebra::from_matrices({d1, d2}, Matrix::Identity(2, 2));
  const auto chars = even_characters(a);
  REQUIRE(chars.size() == 2);
  // Values against even_basis(); map back to the declared basis by solving.
  std::vector<std::pair<Complex, Complex>> seen;
  for (const auto& c : chars) {
    const Vector on_basis = a.even_basis().transpose().colPivHouseholderQr().solve(c.values);
    seen.emplace_back(on_basis(0), on_basis(1));
    CHECK(even_character_residual(a, c) <= kCharacterTol);
  }
  std::sort(seen.begin(), seen.end(),
            [](auto& x, auto& y) { return x.second.real() < y.second.real(); });
  CHECK(std::abs(seen[0].first - 1.0) <= kCharacterTol);
  CHECK(std::abs(seen[0].second - 1.0) <= kCharacterTol);
  CHECK(std::abs(seen[1].first - 1.0) <= kCharacterTol);
  CHECK(std::abs(seen[1].second - 2.0) <= kCharacterTol);
}

TEST_CASE("even characters of scalars and of function algebras") {
  const KreinAlgebra scalars = KreinAlgebra::from_matrices({Matrix::Identity(2, 2)},
                                                           Matrix::Identity(2, 2));
  const auto one = even_characters(scalars);
  REQUIRE(one.size() == 1);
  CHECK(std::abs(one[0].values(0) - 1.0) <= kCharacterTol);
  CHECK(even_characters(build_function_algebra(5)).size() == 5);
  CHECK_THROWS_AS(even_characters(fixtures::noncommutative_m2()), NotCommutativeError);
}

TEST_CASE("extension of the identity character of K") {
  const KreinAlgebra k = build_function_algebra(1);
  const auto chars = even_characters(k);
  REQUIRE(chars.size() == 1);
  const Character w = extend_character(k, chars[0]);
  const std::vector<KElem> values{{Complex(2, 1), Complex(-1, 3)}};
  const GradedElement x = function_element(values);
  CHECK(close(w(x), values[0]));
  CHECK(character_residual(k, w) <= kCharacterTol);
  CHECK(evenness_defect(k, w) <= kCharacterTol);
  CHECK_THROWS_AS(extend_character(k.with_odd_generator(std::nullopt), chars[0]),
                  MissingOddGeneratorError);
}

TEST_CASE("spectrum classes of K and of C(X,K)") {
  const auto k_classes = spectrum_classes(build_function_algebra(1));
  REQUIRE(k_classes.size() == 1);
  for (Eigen::Index i = 0; i < 2; ++i) {
    const KElem v = k_classes[0].partner.values[static_cast<std::size_t>(i)];
    CHECK(close(v, k_gamma(k_classes[0].even_rep.values[static_cast<std::size_t>(i)])));
  }
  const auto classes = spectrum_classes(build_function_algebra(3));
  CHECK(classes.size() == 3);
}

TEST_CASE("characters agree with block evaluation up to ordering") {
  for (int n = 1; n <= 4; ++n) {
    for (bool conj : {false, true}) {
      linalg::Rng rng(500 + n);
      const KreinAlgebra base = build_function_algebra(n);
      const Matrix w = conj ? linalg::random_unitary(rng, 2 * n) : Matrix::Identity(2 * n, 2 * n);
      const KreinAlgebra a = conjugate(base, w);
      const auto classes = spectrum_classes(a);
      REQUIRE(classes.size() == static_cast<std::size_t>(n));

      std::vector<bool> used(static_cast<std::size_t>(n), false);
      for (const auto& cls : classes) {
        int match = -1;
        for (int p = 0; p < n; ++p) {
          const auto ev = block_evaluation(a, w, p);
          if (same_character(cls.even_rep.values, ev)) {
            CHECK(same_character(cls.partner.values, gamma_of(ev)));
            match = p;
          }
        }
        REQUIRE(match >= 0);
        CHECK_FALSE(used[static_cast<std::size_t>(match)]);
        used[static_cast<std::size_t>(match)] = true;
        // Exactly one member of the class is even.
        CHECK(evenness_defect(a, cls.even_rep) <= kCharacterTol);
        CHECK(evenness_defect(a, cls.partner) > 0.5);
      }
    }
  }
}

TEST_CASE("gelfand transform of the unit and of a function") {
  const KreinAlgebra a = build_function_algebra(3);
  const auto classes = spectrum_classes(a);
  for (const KElem& v : gelfand(a, classes, a.unit())) CHECK(close(v, KElem::unit()));

  const std::vector<KElem> f{{1.0, 2.0}, {Complex(0, 1), 0.5}, {-3.0, Complex(1, 1)}};
  const auto hat = gelfand(a, classes, function_element(f));
  std::vector<bool> hit(3, false);
  for (const KElem& v : hat)
    for (int p = 0; p < 3; ++p)
      if (close(v, f[p])) hit[p] = true;
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  CHECK(std::abs(sup_norm(hat) - a.norm(function_element(f))) <= 1e-9);

  const GelfandTransform g(a, classes);
  CHECK(g.matrix().rows() == 6);
  const GradedElement x = function_element(f);
  CHECK(a.distance(g.preimage(g.to_function(x)), x) <= 1e-9);
}

TEST_CASE("spectral theorem on K, C(X,K) and conjugates") {
  const SpectralReport k = verify_spectral_theorem(build_function_algebra(1), 30, 1);
  CHECK(k.report.all_passed());
  CHECK(k.rank == 2);
  CHECK(k.spectrum_size == 1);
  for (int n : {2, 8}) {
    for (const KreinAlgebra& a : {build_function_algebra(n), fixtures::conjugated(n, 77)}) {
      const SpectralReport r = verify_spectral_theorem(a, 30, 2);
      for (const Check& c : r.report.checks) {
        INFO(c.name << " residual " << c.max_residual);
        CHECK(c.passed);
      }
      CHECK(r.spectrum_size == n);
      CHECK(r.rank == 2 * n);
    }
  }
}

TEST_CASE("spectral theorem names the failed hypothesis") {
  auto hypothesis_of = [](const KreinAlgebra& a) {
    try {
      verify_spectral_theorem(a, 5, 1);
    } catch (const PreconditionError& e) {
      return std::optional<Hypothesis>(e.hypothesis());
    }
    return std::optional<Hypothesis>();
  };
  CHECK(hypothesis_of(fixtures::noncommutative_m2()) == Hypothesis::Commutative);
  CHECK(hypothesis_of(fixtures::non_full()) == Hypothesis::Full);
  CHECK(hypothesis_of(fixtures::broken_generator(2)) == Hypothesis::OddSymmetry);
  CHECK(hypothesis_of(build_function_algebra(2).with_odd_generator(std::nullopt)) ==
        Hypothesis::OddSymmetry);
}

TEST_CASE("kernel lemmas on every character") {
  for (const KreinAlgebra& a : {build_function_algebra(3), fixtures::conjugated(4, 12)}) {
    for (const auto& cls : spectrum_classes(a)) {
      for (const Character* w : {&cls.even_rep, &cls.partner}) {
        const Report r = kernel_lemma_checks(a, *w, 100, 9);
        for (const Check& c : r.checks) {
          INFO(c.name << " residual " << c.max_residual);
          CHECK(c.passed);
        }
      }
    }
  }
}

TEST_CASE("quotients") {
  const KreinAlgebra a = build_function_algebra(2);
  // Trivial ideal: nothing is lost.
  const Quotient whole = quotient_by_ideal(a, {});
  CHECK(whole.algebra.dim() == 4);

  // Functions vanishing at p = 0: coordinates b_0 and a_0.
  const Quotient q = quotient_by_ideal(a, {a.basis_element(0), a.basis_element(1)});
  CHECK(q.algebra.dim() == 2);
  CHECK(q.algebra.even_dim() == 1);
  const auto iso = rank_one_isomorphism(q.algebra);
  CHECK(iso.rows() == 2);

  CHECK_THROWS_AS(quotient_by_ideal(a, {a.unit()}), NotIdealError);
  // e_0 + a_1: not closed under multiplication by a_0.
  CHECK_THROWS_AS(quotient_by_ideal(a, {a.basis_element(1) + a.basis_element(2)}), NotIdealError);

  // Diagonal 2x2 matrices with the swap symmetry: C (+) 0 is an ideal that alpha moves.
  Matrix swap = Matrix::Zero(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const KreinAlgebra diag = KreinAlgebra::from_matrices({p0, p1}, swap);
  CHECK_THROWS_AS(quotient_by_ideal(diag, {diag.basis_element(0)}), NotAlphaInvariantError);
}

TEST_CASE("character ideals give rank-one quotients isomorphic to K") {
  for (int n : {1, 2, 4, 8}) {
    const KreinAlgebra a = fixtures::conjugated(n, 31 * n);
    for (const EvenCharacter& omega : even_characters(a)) {
      const QuotientConnection qc = quotient_connection(a, omega);
      CHECK(qc.quotient_dim == 2);
      CHECK(qc.rank_one);
      CHECK(qc.isomorphism_residual <= kCharacterTol);
      CHECK(qc.induced_map_residual <= kCharacterTol);
    }
  }
}
