#pragma once

// JSON encoding of scalars, elements and algebra instances.
//
// Instances are either {"kind": "function_algebra", "points": N} or
// {"kind": "matrix_algebra", "ambient_dim": n, "basis": [matrix...],
//  "symmetry_unitary": matrix, "odd_generator": coords | null}.
// Complex numbers are [re, im]; matrices are row-major arrays of rows.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "krein/finite_krein.hpp"
#include "krein/kalgebra.hpp"

namespace krein::io {

using nlohmann::json;

json to_json(Complex c);
json to_json(const KElem& x);
json to_json(const DeformedElem& x);
json coords_to_json(const Vector& coords);
json matrix_to_json(const Matrix& m);

/// Parsers report the offending field through SchemaError::field().
Complex complex_from_json(const json& j, const std::string& path);
KElem kelem_from_json(const json& j, const std::string& path = "");
Vector coords_from_json(const json& j, const std::string& path);
Matrix matrix_from_json(const json& j, Eigen::Index n, const std::string& path);

/// Builds and validates the algebra described by an instance document.
/// Throws SchemaError for shape problems and InvalidAlgebraError when the
/// described matrices do not form a valid algebra.
KreinAlgebra algebra_from_json(const json& instance);

json function_algebra_instance(int points);
/// Serializes any algebra in the matrix_algebra form.
json matrix_algebra_instance(const KreinAlgebra& a);

/// Reads and parses an instance file. Syntax errors become SchemaError with
/// the line and column reported by the parser.
KreinAlgebra load_instance(const std::filesystem::path& path);

/// Deterministic text form used for every file the tools write.
std::string dump(const json& j);

}  // namespace krein::io
