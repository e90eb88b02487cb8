#pragma once

// Hand-built algebras that violate one hypothesis each.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "krein/finite_krein.hpp"
#include "krein/instance_io.hpp"
#include "krein/linalg.hpp"

namespace fixtures {

using krein::Complex;
using krein::KreinAlgebra;
using krein::Matrix;
using krein::Vector;

inline Matrix embed(const Matrix& block, Eigen::Index n, Eigen::Index at) {
  Matrix m = Matrix::Zero(n, n);
  m.block(at, at, block.rows(), block.cols()) = block;
  return m;
}

inline Matrix t_matrix(Complex a, Complex b) {
  Matrix m(2, 2);
  m << a, b, b, a;
  return m;
}

// K (+) C inside M_3: the odd part lives on the first block only, so its
// inner products reach I_2 (+) 0 but never 0 (+) 1.
inline KreinAlgebra non_full() {
  Matrix u = Matrix::Identity(3, 3);
  u(1, 1) = -1.0;
  std::vector<Matrix> basis{embed(t_matrix(1.0, 0.0), 3, 0), embed(t_matrix(0.0, 1.0), 3, 0),
                            embed(Matrix::Identity(1, 1), 3, 2)};
  return KreinAlgebra::from_matrices(basis, u);
}

// M_2 with trivial symmetry: the even part does not commute and the odd part is zero.
inline KreinAlgebra noncommutative_m2() {
  std::vector<Matrix> basis;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix e = Matrix::Zero(2, 2);
      e(i, j) = 1.0;
      basis.push_back(e);
    }
  return KreinAlgebra::from_matrices(basis, Matrix::Identity(2, 2));
}

// C(X, K) with the odd generator doubled, so e^2 = 4.
inline KreinAlgebra broken_generator(int points) {
  const KreinAlgebra a = krein::build_function_algebra(points);
  return a.with_odd_generator(Vector(2.0 * a.odd_generator()->coords));
}

// C(X, K) conjugated by a seeded random unitary.
inline KreinAlgebra conjugated(int points, std::uint64_t seed) {
  krein::linalg::Rng rng(seed);
  const KreinAlgebra base = krein::build_function_algebra(points);
  return krein::conjugate(base, krein::linalg::random_unitary(rng, base.ambient_dim()));
}

inline std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("krein_test_" + name);
}

inline std::filesystem::path write_json(const std::string& name, const nlohmann::json& j) {
  const auto path = temp_path(name);
  std::ofstream(path) << krein::io::dump(j);
  return path;
}

inline std::filesystem::path write_text(const std::string& name, const std::string& text) {
  const auto path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace fixtures
