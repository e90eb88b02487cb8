#include "krein/checks.hpp"

#include <algorithm>
#include <cmath>

#include "krein/instance_io.hpp"
#include "krein/linalg.hpp"

namespace krein {

namespace {

using nlohmann::json;

json witness(const GradedElement& x) { return io::coords_to_json(x.coords); }

json witness(const GradedElement& x, const GradedElement& y) {
  return json{{"x", witness(x)}, {"y", witness(y)}};
}

/// Relative Frobenius residual of two coordinate vectors.
double gap(const KreinAlgebra& a, const GradedElement& lhs, const GradedElement& rhs) {
  return a.frobenius(lhs - rhs) / std::max(1.0, a.frobenius(lhs));
}

std::vector<GradedElement> columns(const Matrix& m) {
  std::vector<GradedElement> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.cols(); ++i) out.push_back({m.col(i)});
  return out;
}

}  // namespace

Report verify_axioms(const KreinAlgebra& a, int samples, std::uint64_t seed, double tol) {
  Report report;
  linalg::Rng rng(seed);
  std::vector<GradedElement> xs;
  std::vector<GradedElement> ys;
  for (int s = 0; s < samples; ++s) {
    xs.push_back(random_element(a, rng));
    ys.push_back(random_element(a, rng));
  }
  const auto even = columns(a.even_basis());
  const auto odd = columns(a.odd_basis());
  const GradedElement one = a.unit();

  {
    ResidualTracker t("alpha_automorphism", tol);
    t.add(gap(a, a.alpha(one), one));
    for (std::size_t s = 0; s < xs.size(); ++s) {
      const auto& x = xs[s];
      const auto& y = ys[s];
      t.add(gap(a, a.alpha(a.alpha(x)), x), witness(x));
      t.add(gap(a, a.alpha(a.mul(x, y)), a.mul(a.alpha(x), a.alpha(y))), witness(x, y));
      t.add(gap(a, a.alpha(a.star(x)), a.star(a.alpha(x))), witness(x));
    }
    report.add(t.finish());
  }
  {
    ResidualTracker t("decomposition", tol);
    for (const auto& x : xs) {
      const auto [ev, od] = decompose(a, x);
      t.add(gap(a, ev + od, x), witness(x));
      t.add(gap(a, a.alpha(ev), ev), witness(x));
      t.add(gap(a, a.alpha(od), -1.0 * od), witness(x));
    }
    report.add(t.finish());
  }
  {
    ResidualTracker cstar("cstar_identity", tol);
    ResidualTracker krein("krein_identity", tol);
    for (const auto& x : xs) {
      const double n2 = std::pow(a.norm(x), 2);
      const double scale = std::max(1.0, n2);
      cstar.add(std::abs(a.norm(a.mul(a.dagger(x), x)) - n2) / scale, witness(x));
      krein.add(std::abs(a.norm(a.mul(a.alpha(a.star(x)), x)) - n2) / scale, witness(x));
    }
    report.add(cstar.finish());
    report.add(krein.finish());
  }
  {
    ResidualTracker t("bimodule_axioms", tol);
    auto left = [&](const GradedElement& x, const GradedElement& y) {
      return a.mul(x, a.dagger(y));
    };
    auto right = [&](const GradedElement& x, const GradedElement& y) {
      return a.mul(a.dagger(x), y);
    };
    for (const auto& x : odd) {
      for (const auto& y : odd) {
        t.add(gap(a, a.dagger(right(x, y)), right(y, x)), witness(x, y));
        t.add(gap(a, a.dagger(left(x, y)), left(y, x)), witness(x, y));
        t.add(a.frobenius(a.odd_part(right(x, y))) / std::max(1.0, a.frobenius(right(x, y))),
              witness(x, y));
        t.add(a.frobenius(a.odd_part(left(x, y))) / std::max(1.0, a.frobenius(left(x, y))),
              witness(x, y));
        for (const auto& c : even) {
          // (c x) b = c (x b) is covered with b = c' in the next loop.
          t.add(gap(a, right(x, a.mul(c, y)), right(a.mul(a.dagger(c), x), y)), witness(x, y));
          t.add(gap(a, right(x, a.mul(y, c)), a.mul(right(x, y), c)), witness(x, y));
          t.add(gap(a, left(a.mul(c, x), y), a.mul(c, left(x, y))), witness(x, y));
          t.add(gap(a, left(a.mul(x, c), y), left(x, a.mul(y, a.dagger(c)))), witness(x, y));
        }
      }
      for (const auto& c : even)
        for (const auto& b : even)
          t.add(gap(a, a.mul(a.mul(c, x), b), a.mul(c, a.mul(x, b))), witness(x));
    }
    report.add(t.finish());

    ResidualTracker imp("imprimitivity_identity", tol);
    for (const auto& x : odd)
      for (const auto& y : odd)
        for (const auto& z : odd)
          imp.add(gap(a, a.mul(left(x, y), z), a.mul(x, right(y, z))), witness(x, y));
    report.add(imp.finish());
  }
  {
    ResidualTracker norms("bimodule_norms_coincide", tol);
    ResidualTracker positive("inner_product_positivity", tol);
    for (const auto& sample : xs) {
      const GradedElement x = a.odd_part(sample);
      const double l = a.norm(a.mul(x, a.dagger(x)));
      const GradedElement r = a.mul(a.dagger(x), x);
      const double rn = a.norm(r);
      norms.add(std::abs(l - rn) / std::max(1.0, rn), witness(x));
      Eigen::SelfAdjointEigenSolver<Matrix> eig(a.to_matrix(r), Eigen::EigenvaluesOnly);
      const double floor = std::max(0.0, -eig.eigenvalues().minCoeff());
      // <x|x> = 0 forces x = 0: ||<x|x>|| = ||x||^2.
      const double n2 = std::pow(a.norm(x), 2);
      positive.add(std::max(floor, std::abs(rn - n2) / std::max(1.0, n2)), witness(x));
    }
    report.add(norms.finish());
    report.add(positive.finish());
  }
  {
    const Eigen::Index rank = fullness_rank(a);
    const auto missing = static_cast<double>(a.even_dim() - rank);
    report.add(Check{"fullness", rank == a.even_dim(), missing, std::nullopt});
  }
  {
    const CommutativityVerdict v = check_commutative_symmetric(a);
    report.add(Check{"commutative", v.commutative, v.commutative ? 0.0 : 1.0, std::nullopt});
    report.add(Check{"symmetric_bimodule", v.symmetric_bimodule,
                     v.symmetric_bimodule ? 0.0 : 1.0, std::nullopt});
    const bool agree = v.commutative == v.symmetric_bimodule;
    report.add(Check{"commutativity_equivalence", agree, agree ? 0.0 : 1.0, std::nullopt});
  }
  {
    const OddSymmetryVerdict v = check_odd_symmetry(a, 0, seed);
    report.add(Check{"odd_symmetry", v.exists, v.exists ? 0.0 : 1.0,
                     a.odd_generator() ? std::optional<json>(witness(*a.odd_generator()))
                                       : std::nullopt});
    ResidualTracker iso("odd_symmetry_isometric", tol);
    if (v.exists) {
      for (const auto& x : xs) {
        const double nx = a.norm(x);
        iso.add(std::abs(a.norm(apply_odd_symmetry(a, x)) - nx) / std::max(1.0, nx), witness(x));
      }
      report.add(iso.finish());
    } else {
      report.add(Check{"odd_symmetry_isometric", false, 1.0, std::nullopt});
    }
  }
  return report;
}

}  // namespace krein
