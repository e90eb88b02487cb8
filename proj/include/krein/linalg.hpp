#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "krein/types.hpp"

namespace krein::linalg {

/// Largest singular value.
double operator_norm(const Matrix& m);

/// Numerical rank: singular values above tol * max(1, largest singular value).
Eigen::Index rank(const Matrix& m, double tol = kSpanTol);

/// Orthonormal basis of the column space of m.
Matrix column_space(const Matrix& m, double tol = kSpanTol);

/// Orthonormal basis of the null space of m (columns).
Matrix null_space(const Matrix& m, double tol = kSpanTol);

/// Orthonormal basis of the orthogonal complement of span(q) in C^n,
/// where q already has orthonormal columns.
Matrix orthogonal_complement(const Matrix& q);

/// Sine of the largest principal angle between two subspaces given by
/// orthonormal column bases. Returns 1 if the dimensions differ.
double max_principal_angle_sine(const Matrix& q1, const Matrix& q2);

/// Indices of a maximal linearly independent subset of the columns,
/// chosen greedily from left to right.
std::vector<Eigen::Index> independent_columns(const Matrix& m, double tol = kSpanTol);

/// Column-major flattening of a square matrix.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index n);

/// Seeded generator shared by every sampler in the library.
using Rng = std::mt19937_64;

/// Complex number drawn uniformly from the closed unit disk.
Complex random_unit_disk(Rng& rng);

/// Vector of d coordinates drawn independently from the unit disk.
Vector random_coords(Rng& rng, Eigen::Index d);

/// Haar-like random unitary: QR of a complex Gaussian matrix with phases fixed.
Matrix random_unitary(Rng& rng, Eigen::Index n);

}  // namespace krein::linalg
