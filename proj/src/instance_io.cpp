#include "krein/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace krein::io {

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const KElem& x) { return json{{"a", to_json(x.a)}, {"b", to_json(x.b)}}; }

json to_json(const DeformedElem& x) { return json{{"m", to_json(x.m)}, {"n", to_json(x.n)}}; }

json coords_to_json(const Vector& coords) {
  json out = json::array();
  for (Eigen::Index i = 0; i < coords.size(); ++i) out.push_back(to_json(coords(i)));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Complex complex_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError(path, "expected a complex number [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

KElem kelem_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw SchemaError(path, "expected an object with fields \"a\" and \"b\"");
  return {complex_from_json(j["a"], path + "/a"), complex_from_json(j["b"], path + "/b")};
}

Vector coords_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of complex numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], path + "/" + std::to_string(i));
  return v;
}

Matrix matrix_from_json(const json& j, Eigen::Index n, const std::string& path) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n))
    throw SchemaError(path, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::string row_path = path + "/" + std::to_string(r);
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw SchemaError(row_path, "expected " + std::to_string(n) + " entries");
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                  row_path + "/" + std::to_string(c));
  }
  return m;
}

namespace {

const json& require(const json& obj, const char* key) {
  if (!obj.contains(key)) throw SchemaError(std::string("/") + key, "missing required field");
  return obj[key];
}

}  // namespace

KreinAlgebra algebra_from_json(const json& instance) {
  if (!instance.is_object()) throw SchemaError("", "instance must be a JSON object");
  const json& kind = require(instance, "kind");
  if (!kind.is_string()) throw SchemaError("/kind", "expected a string");

  if (kind == "function_algebra") {
    const json& points = require(instance, "points");
    if (!points.is_number_integer() || points.get<long long>() < 1)
      throw SchemaError("/points", "expected a positive integer");
    if (points.get<long long>() > 4096) throw SchemaError("/points", "too many points");
    return build_function_algebra(points.get<int>());
  }
  if (kind != "matrix_algebra")
    throw SchemaError("/kind", "expected \"function_algebra\" or \"matrix_algebra\"");

  const json& dim = require(instance, "ambient_dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1)
    throw SchemaError("/ambient_dim", "expected a positive integer");
  const auto n = static_cast<Eigen::Index>(dim.get<long long>());

  const json& basis_json = require(instance, "basis");
  if (!basis_json.is_array() || basis_json.empty())
    throw SchemaError("/basis", "expected a non-empty array of matrices");
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < basis_json.size(); ++i)
    basis.push_back(matrix_from_json(basis_json[i], n, "/basis/" + std::to_string(i)));

  Matrix symmetry = matrix_from_json(require(instance, "symmetry_unitary"), n, "/symmetry_unitary");

  std::optional<Vector> generator;
  if (instance.contains("odd_generator") && !instance["odd_generator"].is_null()) {
    generator = coords_from_json(instance["odd_generator"], "/odd_generator");
    if (generator->size() != static_cast<Eigen::Index>(basis.size()))
      throw SchemaError("/odd_generator", "expected " + std::to_string(basis.size()) +
                                              " coordinates, got " +
                                              std::to_string(generator->size()));
  }
  return KreinAlgebra::from_matrices(std::move(basis), std::move(symmetry), generator);
}

json function_algebra_instance(int points) {
  return json{{"kind", "function_algebra"}, {"points", points}};
}

json matrix_algebra_instance(const KreinAlgebra& a) {
  json basis = json::array();
  for (const Matrix& b : a.basis()) basis.push_back(matrix_to_json(b));
  json out{{"kind", "matrix_algebra"},
           {"ambient_dim", a.ambient_dim()},
           {"basis", basis},
           {"symmetry_unitary", matrix_to_json(a.symmetry())}};
  out["odd_generator"] = a.odd_generator() ? coords_to_json(a.odd_generator()->coords) : json();
  return out;
}

KreinAlgebra load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", path.string() + ": " + e.what());
  }
  return algebra_from_json(doc);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace krein::io
