#include "krein/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "krein/instance_io.hpp"
#include "krein/linalg.hpp"
#include "krein/quotient.hpp"

namespace krein {

namespace {

constexpr int kMaxRetries = 5;
constexpr double kClusterTol = 1e-8;

double distance(const KElem& x, const KElem& y) { return k_norm(x - y); }

/// Coordinates of even elements against even_basis(), as an m x d map.
Matrix even_coordinate_map(const KreinAlgebra& a) {
  const Matrix framed = a.frame() * a.even_basis();
  return framed.completeOrthogonalDecomposition().pseudoInverse() * a.frame();
}

/// Lexicographic comparison with a tolerance, real part before imaginary part.
bool lex_greater(const Vector& x, const Vector& y) {
  for (Eigen::Index i = 0; i < std::min(x.size(), y.size()); ++i) {
    for (int part = 0; part < 2; ++part) {
      const double u = part == 0 ? x(i).real() : x(i).imag();
      const double v = part == 0 ? y(i).real() : y(i).imag();
      if (std::abs(u - v) > kClusterTol) return u > v;
    }
  }
  return false;
}

struct Attempt {
  bool ok = false;
  std::vector<EvenCharacter> characters;
};

Attempt diagonalize_once(const KreinAlgebra& a, const std::vector<Matrix>& even_matrices,
                         const std::vector<Matrix>& hermitian, const Matrix& unit,
                         linalg::Rng& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const Eigen::Index n = a.ambient_dim();
  Matrix h = Matrix::Zero(n, n);
  for (const Matrix& g : hermitian) h += coeff(rng) * g;
  h = 0.5 * (h + h.adjoint()).eval();

  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const Matrix& vectors = eig.eigenvectors();
  // Relative to the size of h as well as the spread: when h is nearly scalar
  // the spread is pure roundoff.
  const double scale =
      std::max({lambda(n - 1) - lambda(0), std::abs(lambda(0)), std::abs(lambda(n - 1))});
  const double gap = kClusterTol * std::max(scale, 1e-12);

  Attempt out;
  const double tol = a.tolerance();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && lambda(end) - lambda(end - 1) <= gap) ++end;
    const Matrix v = vectors.middleCols(start, end - start);
    const auto k = static_cast<double>(v.cols());
    start = end;

    // The unit acts as 0 or 1 on each joint eigenspace.
    const Matrix unit_block = v.adjoint() * unit * v;
    const Complex unit_value = unit_block.trace() / k;
    if (std::abs(unit_value) <= tol) continue;
    if (std::abs(unit_value - 1.0) > kClusterTol) return {};

    EvenCharacter omega{Vector(static_cast<Eigen::Index>(even_matrices.size()))};
    for (std::size_t j = 0; j < even_matrices.size(); ++j) {
      const Matrix& m = even_matrices[j];
      const Matrix block = v.adjoint() * m * v;
      const Complex value = block.trace() / k;
      const double scale = std::max(1.0, linalg::operator_norm(m));
      const double scalar_gap =
          (block - value * Matrix::Identity(v.cols(), v.cols())).norm() / scale;
      const double invariance = (m * v - v * block).norm() / scale;
      if (scalar_gap > kClusterTol || invariance > kClusterTol) return {};
      omega.values(static_cast<Eigen::Index>(j)) = value;
    }
    for (const EvenCharacter& other : out.characters) {
      if ((other.values - omega.values).cwiseAbs().maxCoeff() <= kClusterTol) return {};
    }
    out.characters.push_back(std::move(omega));
  }
  out.ok = static_cast<Eigen::Index>(out.characters.size()) == a.even_dim();
  return out;
}

}  // namespace

KElem Character::operator()(const GradedElement& x) const {
  KElem out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Complex c = x.coords(static_cast<Eigen::Index>(i));
    out.a += c * values[i].a;
    out.b += c * values[i].b;
  }
  return out;
}

Character compose_gamma(const Character& w) {
  Character out = w;
  for (KElem& v : out.values) v = k_gamma(v);
  return out;
}

std::vector<EvenCharacter> even_characters(const KreinAlgebra& a, std::uint64_t seed) {
  const Matrix& even = a.even_basis();
  for (Eigen::Index i = 0; i < even.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < even.cols(); ++j) {
      const GradedElement x{even.col(i)};
      const GradedElement y{even.col(j)};
      const GradedElement xy = a.mul(x, y);
      if (a.distance(xy, a.mul(y, x)) > a.tolerance() * std::max(1.0, a.norm(xy)))
        throw NotCommutativeError("even part is not commutative");
    }
  }

  std::vector<Matrix> even_matrices;
  std::vector<Matrix> hermitian;
  for (Eigen::Index i = 0; i < even.cols(); ++i) {
    const Matrix m = a.to_matrix(GradedElement{even.col(i)});
    hermitian.push_back(0.5 * (m + m.adjoint()));
    hermitian.push_back(Complex(0.0, -0.5) * (m - m.adjoint()));
    even_matrices.push_back(m);
  }
  const Matrix unit = a.to_matrix(a.unit());

  linalg::Rng rng(seed);
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    Attempt result = diagonalize_once(a, even_matrices, hermitian, unit, rng);
    if (!result.ok) continue;
    std::sort(result.characters.begin(), result.characters.end(),
              [](const EvenCharacter& x, const EvenCharacter& y) {
                return lex_greater(x.values, y.values);
              });
    return result.characters;
  }
  throw ClusteringError("joint eigenspaces not separated after " + std::to_string(kMaxRetries) +
                        " retries");
}

Character extend_character(const KreinAlgebra& a, const EvenCharacter& omega) {
  if (!a.odd_generator()) throw MissingOddGeneratorError("extension needs an odd generator");
  const GradedElement& e = *a.odd_generator();
  // omega as a linear functional on coordinates of even elements.
  const Eigen::RowVectorXcd functional = omega.values.transpose() * even_coordinate_map(a);

  Character w;
  w.values.reserve(static_cast<std::size_t>(a.dim()));
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    const GradedElement x = a.basis_element(i);
    const GradedElement even = a.even_part(x);
    const GradedElement odd_shifted = a.even_part(a.mul(e, a.odd_part(x)));
    w.values.push_back({functional * even.coords, functional * odd_shifted.coords});
  }
  return w;
}

double character_residual(const KreinAlgebra& a, const Character& w) {
  double worst = distance(w(a.unit()), KElem::unit());
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    const GradedElement x = a.basis_element(i);
    const KElem wx = w(x);
    worst = std::max(worst, distance(w(a.star(x)), k_star(wx)));
    worst = std::max(worst, distance(w(a.alpha(x)), k_gamma(wx)));
    for (Eigen::Index j = 0; j < a.dim(); ++j) {
      const GradedElement y = a.basis_element(j);
      worst = std::max(worst, distance(w(a.mul(x, y)), k_mul(wx, w(y))));
    }
  }
  return worst;
}

double even_character_residual(const KreinAlgebra& a, const EvenCharacter& omega) {
  const Eigen::RowVectorXcd functional = omega.values.transpose() * even_coordinate_map(a);
  auto eval = [&](const GradedElement& x) { return Complex(functional * x.coords); };
  const Matrix& even = a.even_basis();
  double worst = std::abs(eval(a.unit()) - 1.0);
  for (Eigen::Index i = 0; i < even.cols(); ++i) {
    const GradedElement x{even.col(i)};
    worst = std::max(worst, std::abs(eval(a.dagger(x)) - std::conj(omega.values(i))));
    for (Eigen::Index j = 0; j < even.cols(); ++j) {
      const GradedElement y{even.col(j)};
      worst = std::max(worst, std::abs(eval(a.mul(x, y)) - omega.values(i) * omega.values(j)));
    }
  }
  return worst;
}

double evenness_defect(const KreinAlgebra& a, const Character& w) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    const GradedElement x = a.basis_element(i);
    worst = std::max(worst, distance(k_epsilon(w(apply_odd_symmetry(a, x))), w(x)));
  }
  return worst;
}

std::vector<SpectrumClass> spectrum_classes(const KreinAlgebra& a, std::uint64_t seed) {
  std::vector<SpectrumClass> out;
  for (EvenCharacter& omega : even_characters(a, seed)) {
    Character w = extend_character(a, omega);
    Character partner = compose_gamma(w);
    out.push_back({std::move(omega), std::move(w), std::move(partner)});
  }
  return out;
}

GelfandTransform::GelfandTransform(const KreinAlgebra& a, std::vector<SpectrumClass> classes)
    : classes_(std::move(classes)),
      matrix_(2 * static_cast<Eigen::Index>(classes_.size()), a.dim()) {
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const auto& values = classes_[k].even_rep.values;
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
      matrix_(2 * static_cast<Eigen::Index>(k), i) = values[static_cast<std::size_t>(i)].a;
      matrix_(2 * static_cast<Eigen::Index>(k) + 1, i) = values[static_cast<std::size_t>(i)].b;
    }
  }
}

std::vector<KElem> GelfandTransform::operator()(const GradedElement& x) const {
  return function_values(to_function(x));
}

GradedElement GelfandTransform::preimage(const GradedElement& f) const {
  return {matrix_.completeOrthogonalDecomposition().solve(f.coords)};
}

std::vector<KElem> gelfand(const KreinAlgebra& a, const std::vector<SpectrumClass>& classes,
                           const GradedElement& x) {
  std::vector<KElem> out;
  out.reserve(classes.size());
  const GradedElement checked = a.element(x.coords);
  for (const SpectrumClass& c : classes) out.push_back(c.even_rep(checked));
  return out;
}

double sup_norm(const std::vector<KElem>& f) {
  double worst = 0.0;
  for (const KElem& v : f) worst = std::max(worst, k_norm(v));
  return worst;
}

namespace {

using nlohmann::json;

double sup_distance(const std::vector<KElem>& f, const std::vector<KElem>& g) {
  double worst = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) worst = std::max(worst, distance(f[k], g[k]));
  return worst;
}

template <typename Op>
std::vector<KElem> pointwise(const std::vector<KElem>& f, Op op) {
  std::vector<KElem> out;
  out.reserve(f.size());
  for (const KElem& v : f) out.push_back(op(v));
  return out;
}

json witness(const GradedElement& x) { return io::coords_to_json(x.coords); }

}  // namespace

SpectralReport verify_spectral_theorem(const KreinAlgebra& a, int samples, std::uint64_t seed,
                                       double tol) {
  if (!check_commutative_symmetric(a).commutative)
    throw PreconditionError(Hypothesis::Commutative, "algebra not commutative");
  if (!check_full(a)) throw PreconditionError(Hypothesis::Full, "odd part not full");
  if (!check_odd_symmetry(a, 0, seed).exists)
    throw PreconditionError(Hypothesis::OddSymmetry, "no odd symmetry");

  SpectralReport out;
  out.classes = spectrum_classes(a, seed);
  const auto m = static_cast<int>(out.classes.size());
  out.spectrum_size = m;
  const GelfandTransform transform(a, out.classes);
  const KreinAlgebra target = build_function_algebra(m);
  Report& report = out.report;

  report.add(Check{"spectrum_size", m == a.even_dim(),
                   std::abs(static_cast<double>(m - a.even_dim())), std::nullopt});
  {
    ResidualTracker valid("characters_valid", kCharacterTol);
    ResidualTracker classes("class_structure", kCharacterTol);
    for (const SpectrumClass& c : out.classes) {
      valid.add(character_residual(a, c.even_rep));
      valid.add(character_residual(a, c.partner));
      valid.add(even_character_residual(a, c.even));
      classes.add(evenness_defect(a, c.even_rep));
      double partner_gap = 0.0;
      for (std::size_t i = 0; i < c.partner.values.size(); ++i)
        partner_gap = std::max(partner_gap,
                               distance(c.partner.values[i], k_gamma(c.even_rep.values[i])));
      classes.add(partner_gap);
      // The partner must not be even: its defect on the unit is 2.
      classes.add(evenness_defect(a, c.partner) > kCharacterTol ? 0.0 : 1.0);
    }
    report.add(valid.finish());
    report.add(classes.finish());
  }

  // Rank and conditioning measured against the Frobenius geometry of A.
  const Matrix normalized =
      transform.matrix() * a.frame().triangularView<Eigen::Upper>().solve(
                               Matrix::Identity(a.dim(), a.dim()));
  Eigen::JacobiSVD<Matrix> svd(normalized);
  const Eigen::VectorXd& s = svd.singularValues();
  out.rank = linalg::rank(normalized, tol);
  out.condition_number = s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1)
                                                : std::numeric_limits<double>::infinity();
  const bool bijective = out.rank == 2 * m && a.dim() == 2 * m;
  report.add(Check{"transform_rank", bijective, std::abs(static_cast<double>(2 * m - out.rank)),
                   std::nullopt});
  report.add(Check{"transform_injective", s(s.size() - 1) > tol && a.dim() <= 2 * m,
                   s(s.size() - 1) > tol ? 0.0 : 1.0, std::nullopt});

  ResidualTracker add("homomorphism_add", tol);
  ResidualTracker mul("homomorphism_mul", tol);
  ResidualTracker unital("unital", tol);
  ResidualTracker star("star_preserving", tol);
  ResidualTracker dag("dagger_preserving", tol);
  ResidualTracker iso("isometry", tol);
  ResidualTracker target_iso("target_isometry", tol);
  ResidualTracker alpha("alpha_intertwining", tol);
  ResidualTracker eps("epsilon_intertwining", tol);
  ResidualTracker roundtrip("roundtrip", tol);

  unital.add(sup_distance(transform(a.unit()), std::vector<KElem>(m, KElem::unit())));

  linalg::Rng rng(seed);
  for (int sample = 0; sample < samples; ++sample) {
    const GradedElement x = random_element(a, rng);
    const GradedElement y = random_element(a, rng);
    const Complex c = linalg::random_unit_disk(rng);
    const auto fx = transform(x);
    const auto fy = transform(y);
    const double nx = a.norm(x);
    const double ny = a.norm(y);
    const double scale = std::max(1.0, nx);

    std::vector<KElem> expected(fx.size());
    for (std::size_t k = 0; k < fx.size(); ++k) expected[k] = c * fx[k] + fy[k];
    add.add(sup_distance(transform(c * x + y), expected) / std::max(scale, ny), witness(x));

    std::vector<KElem> product(fx.size());
    for (std::size_t k = 0; k < fx.size(); ++k) product[k] = k_mul(fx[k], fy[k]);
    mul.add(sup_distance(transform(a.mul(x, y)), product) / std::max(1.0, nx * ny), witness(x));

    star.add(sup_distance(transform(a.star(x)), pointwise(fx, k_star)) / scale, witness(x));
    dag.add(sup_distance(transform(a.dagger(x)), pointwise(fx, k_dagger)) / scale, witness(x));
    iso.add(std::abs(sup_norm(fx) - nx) / scale, witness(x));
    target_iso.add(std::abs(target.norm(transform.to_function(x)) - nx) / scale, witness(x));
    alpha.add(sup_distance(transform(a.alpha(x)), pointwise(fx, k_gamma)) / scale, witness(x));
    eps.add(sup_distance(transform(apply_odd_symmetry(a, x)), pointwise(fx, k_epsilon)) / scale,
            witness(x));

    // A -> C -> A, and C -> A -> C with products taken in the target algebra.
    const GradedElement back = transform.preimage(transform.to_function(x));
    roundtrip.add(a.norm(back - x) / scale, witness(x));
    const GradedElement f = random_element(target, rng);
    const GradedElement g = random_element(target, rng);
    const GradedElement pre = a.mul(transform.preimage(f), transform.preimage(g));
    const GradedElement fg = target.mul(f, g);
    roundtrip.add(target.norm(transform.to_function(pre) - fg) /
                      std::max(1.0, target.norm(f) * target.norm(g)),
                  witness(f));
  }
  for (ResidualTracker* t : {&add, &mul, &unital, &star, &dag, &iso, &target_iso, &alpha, &eps,
                             &roundtrip})
    report.add(t->finish());
  return out;
}

Report kernel_lemma_checks(const KreinAlgebra& a, const Character& w, int samples,
                           std::uint64_t seed, double tol) {
  Report report;
  const Eigen::Index d = a.dim();
  auto functional = [&](const Character& c) {
    Matrix rows(2, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      rows(0, i) = c.values[static_cast<std::size_t>(i)].a;
      rows(1, i) = c.values[static_cast<std::size_t>(i)].b;
    }
    // Orthonormal kernel basis in the Frobenius geometry, mapped back to coordinates.
    const Matrix inv_frame =
        a.frame().triangularView<Eigen::Upper>().solve(Matrix::Identity(d, d));
    const Matrix kernel_framed = linalg::null_space(rows * inv_frame, a.tolerance());
    return std::pair<Matrix, Matrix>(kernel_framed, inv_frame * kernel_framed);
  };
  const auto [kernel_framed, kernel] = functional(w);

  linalg::Rng rng(seed);
  ResidualTracker forward("kernel_forward", tol);
  ResidualTracker reverse("kernel_reverse", tol);
  for (int s = 0; s < samples; ++s) {
    const GradedElement x{kernel * linalg::random_coords(rng, kernel.cols())};
    const double scale = std::max(1.0, a.norm(x));
    forward.add(k_norm(w(x)) / scale, witness(x));
    forward.add(k_norm(w(a.mul(a.dagger(x), x))) / (scale * scale), witness(x));

    const GradedElement y = random_element(a, rng);
    const double wy = k_norm(w(y));
    const double wyy = k_norm(w(a.mul(a.dagger(y), y)));
    // ||w(y^dagger y)|| = ||w(y)||^2, so nonzero w(y) forces nonzero w(y^dagger y).
    const double consistency = std::abs(wyy - wy * wy) / std::max(1.0, wy * wy);
    reverse.add(wy > tol && wyy <= tol ? 1.0 : consistency, witness(y));
  }
  report.add(forward.finish());
  report.add(reverse.finish());

  const Character partner = compose_gamma(w);
  double even_gap = 0.0;
  const Matrix& even = a.even_basis();
  for (Eigen::Index i = 0; i < even.cols(); ++i) {
    const GradedElement x{even.col(i)};
    even_gap = std::max(even_gap, distance(w(x), partner(x)));
  }
  report.add(Check{"kernel_even_parts_agree", even_gap <= tol, even_gap, std::nullopt});
  const auto [partner_framed, partner_kernel] = functional(partner);
  const double angle = linalg::max_principal_angle_sine(kernel_framed, partner_framed);
  report.add(Check{"kernel_equivalent_characters", angle <= tol, angle, std::nullopt});
  return report;
}

QuotientConnection quotient_connection(const KreinAlgebra& a, const EvenCharacter& omega,
                                       int samples, std::uint64_t seed) {
  QuotientConnection out;
  const Quotient q = quotient_by_ideal(a, character_ideal(a, omega.values));
  const KreinAlgebra& qa = q.algebra;
  out.quotient_dim = qa.dim();
  out.rank_one = qa.dim() == 2 && qa.even_dim() == 1 && qa.odd_dim() == 1;
  if (!out.rank_one) {
    out.isomorphism_residual = std::numeric_limits<double>::infinity();
    out.induced_map_residual = std::numeric_limits<double>::infinity();
    return out;
  }
  const auto iso = rank_one_isomorphism(qa);
  auto to_k = [&](const GradedElement& x) {
    const Eigen::Vector2cd v = iso * x.coords;
    return KElem{v(0), v(1)};
  };

  double worst = distance(to_k(qa.unit()), KElem::unit());
  for (Eigen::Index i = 0; i < qa.dim(); ++i) {
    const GradedElement x = qa.basis_element(i);
    worst = std::max(worst, distance(to_k(qa.star(x)), k_star(to_k(x))));
    worst = std::max(worst, distance(to_k(qa.alpha(x)), k_gamma(to_k(x))));
    for (Eigen::Index j = 0; j < qa.dim(); ++j) {
      const GradedElement y = qa.basis_element(j);
      worst = std::max(worst, distance(to_k(qa.mul(x, y)), k_mul(to_k(x), to_k(y))));
    }
  }
  linalg::Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const GradedElement x = random_element(qa, rng);
    const double nx = qa.norm(x);
    worst = std::max(worst, std::abs(k_norm(to_k(x)) - nx) / std::max(1.0, nx));
  }
  out.isomorphism_residual = worst;

  const Character w = extend_character(a, omega);
  double induced = 0.0;
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    const GradedElement x = a.basis_element(i);
    induced = std::max(induced, distance(to_k(q.apply(x)), w(x)));
  }
  out.induced_map_residual = induced;
  return out;
}

nlohmann::json to_json(const Character& w) {
  json values = json::array();
  for (const KElem& v : w.values) values.push_back(io::to_json(v));
  return values;
}

nlohmann::json to_json(const SpectralReport& r) {
  json j = to_json(r.report);
  j["spectrum_size"] = r.spectrum_size;
  j["rank"] = r.rank;
  j["condition_number"] = r.condition_number;
  json characters = json::array();
  for (const SpectrumClass& c : r.classes) {
    characters.push_back(json{{"even_character", io::coords_to_json(c.even.values)},
                              {"even_rep", to_json(c.even_rep)},
                              {"partner", to_json(c.partner)}});
  }
  j["characters"] = characters;
  return j;
}

}  // namespace krein
