#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gorenstein/affine_map.hpp"
#include "gorenstein/hypersurface.hpp"

namespace gorenstein::io {

using json = nlohmann::json;

/// Reads a JSON document; throws MalformedInput on I/O or parse errors.
json read_json(const std::filesystem::path& path);

/// {"name", "dim_m", "basis", "degrees"?, "products": [{"i", "j", "coeffs"}]}
/// with 1-based i <= j; omitted products are zero, duplicates are rejected.
Algebra algebra_from_json(const json& doc);
json algebra_to_json(const Algebra& a);
Algebra load_algebra(const std::filesystem::path& path);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, std::size_t expected_size);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"e": [...], "lambda": [...]}, optionally with "kernel_basis".
Projection projection_from_json(const Algebra& a, const json& doc);
json projection_to_json(const Projection& pi);

/// {"graph_coeffs": [...]} over the kernel basis of pi.
Vec hyperplane_from_json(const Projection& pi, const json& doc);
json hyperplane_to_json(const Vec& graph_coeffs);

/// {"linear": [[...]], "translation": [...]}
AffineMap affine_map_from_json(const json& doc);
json affine_map_to_json(const AffineMap& f);

struct ScaledCertificate {
  Matrix c;
  Scalar s;
};
/// {"C": [[...]], "s": "p/q"}
ScaledCertificate scaled_certificate_from_json(const json& doc);
json scaled_certificate_to_json(const ScaledCertificate& cert);

/// {"n", "kernel_basis", "e", "terms": [{"exponents", "coeff"}], "g", "h"};
/// terms in descending graded-lex order.
json graph_to_json(const GraphPoly& gp);
json poly_to_json(const MultiPoly& p);

/// {"coords": [...]} (m-coordinates) or {"graph_params": [...]} (point of
/// the graph of gp).
Vec point_from_json(const json& doc, const GraphPoly* gp, std::size_t dim);

}  // namespace gorenstein::io
