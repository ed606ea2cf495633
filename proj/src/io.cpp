#include "gorenstein/io.hpp"

#include <fstream>
#include <set>

namespace gorenstein::io {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> string_list(const json& j) {
  if (!j.is_array()) throw MalformedInput("expected an array of rational strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (item.is_string()) {
      out.push_back(item.get<std::string>());
    } else if (item.is_number_integer()) {
      out.push_back(std::to_string(item.get<long long>()));
    } else {
      throw MalformedInput("rational entries must be strings \"p/q\" or integers");
    }
  }
  return out;
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path.string());
  return guarded("invalid JSON", [&] { return json::parse(in); });
}

Algebra algebra_from_json(const json& doc) {
  return guarded("invalid algebra document", [&] {
    const std::size_t n = doc.at("dim_m").get<std::size_t>();
    const auto labels = doc.at("basis").get<std::vector<std::string>>();
    if (labels.size() != n) throw MalformedInput("basis length differs from dim_m");
    std::optional<std::vector<int>> degrees;
    if (doc.contains("degrees") && !doc.at("degrees").is_null()) degrees = doc.at("degrees").get<std::vector<int>>();
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, zero_vec(n)));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& p : doc.at("products")) {
      const auto i = p.at("i").get<std::size_t>();
      const auto j = p.at("j").get<std::size_t>();
      if (i < 1 || j < 1 || i > n || j > n) throw MalformedInput("product index out of range");
      if (i > j) throw MalformedInput("products must be listed with i <= j");
      if (!seen.emplace(i, j).second) {
        throw MalformedInput("duplicate product (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      const Vec c = vec_from_json(p.at("coeffs"), n);
      table[i - 1][j - 1] = c;
      table[j - 1][i - 1] = c;
    }
    return Algebra(doc.value("name", std::string("unnamed")), labels, std::move(table), degrees);
  });
}

json algebra_to_json(const Algebra& a) {
  json doc;
  doc["name"] = a.name();
  doc["dim_m"] = a.dim();
  doc["basis"] = a.labels();
  if (a.degrees()) doc["degrees"] = *a.degrees();
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (is_zero(a.product(i, j))) continue;
      products.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", vec_to_json(a.product(i, j))}});
    }
  }
  doc["products"] = products;
  return doc;
}

Algebra load_algebra(const std::filesystem::path& path) { return algebra_from_json(read_json(path)); }

json vec_to_json(const Vec& v) { return to_strings(v); }

Vec vec_from_json(const json& j, std::size_t expected_size) {
  Vec v = parse_vec(string_list(j));
  if (v.size() != expected_size) {
    throw MalformedInput("expected " + std::to_string(expected_size) + " coordinates, got " + std::to_string(v.size()));
  }
  return v;
}

json matrix_to_json(const Matrix& m) { return to_strings(m); }

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInput("matrix must be an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j) rows.push_back(string_list(r));
  return parse_matrix(rows);
}

Projection projection_from_json(const Algebra& a, const json& doc) {
  return guarded("invalid projection document", [&] {
    const Vec e = vec_from_json(doc.at("e"), a.dim());
    if (doc.contains("kernel_basis")) {
      std::vector<Vec> kernel;
      for (const auto& k : doc.at("kernel_basis")) kernel.push_back(vec_from_json(k, a.dim()));
      Projection p = projection_with_kernel(a, e, kernel);
      if (doc.contains("lambda") && vec_from_json(doc.at("lambda"), a.dim()) != p.lambda) {
        throw MalformedInput("lambda is inconsistent with kernel_basis and e");
      }
      return p;
    }
    return make_projection(a, e, vec_from_json(doc.at("lambda"), a.dim()));
  });
}

json projection_to_json(const Projection& pi) {
  json kernel = json::array();
  for (const auto& k : pi.kernel_basis) kernel.push_back(vec_to_json(k));
  return {{"e", vec_to_json(pi.e)}, {"lambda", vec_to_json(pi.lambda)}, {"kernel_basis", kernel}};
}

Vec hyperplane_from_json(const Projection& pi, const json& doc) {
  return guarded("invalid hyperplane document", [&] { return vec_from_json(doc.at("graph_coeffs"), pi.n()); });
}

json hyperplane_to_json(const Vec& graph_coeffs) { return {{"graph_coeffs", vec_to_json(graph_coeffs)}}; }

AffineMap affine_map_from_json(const json& doc) {
  return guarded("invalid affine map document", [&] {
    AffineMap f{matrix_from_json(doc.at("linear")), {}};
    if (f.linear.rows() != f.linear.cols()) throw MalformedInput("linear part must be square");
    f.translation = vec_from_json(doc.at("translation"), f.linear.rows());
    return f;
  });
}

json affine_map_to_json(const AffineMap& f) {
  return {{"linear", matrix_to_json(f.linear)}, {"translation", vec_to_json(f.translation)}};
}

ScaledCertificate scaled_certificate_from_json(const json& doc) {
  return guarded("invalid certificate document", [&] {
    return ScaledCertificate{matrix_from_json(doc.at("C")), parse_scalar(doc.at("s").get<std::string>())};
  });
}

json scaled_certificate_to_json(const ScaledCertificate& cert) {
  return {{"C", matrix_to_json(cert.c)}, {"s", to_string(cert.s)}};
}

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"exponents", it->first}, {"coeff", to_string(it->second)}});
  }
  return terms;
}

json graph_to_json(const GraphPoly& gp) {
  json kernel = json::array();
  for (const auto& k : gp.projection.kernel_basis) kernel.push_back(vec_to_json(k));
  json h = json::array();
  for (const auto& plane : gp.h) {
    json rows = json::array();
    for (const auto& row : plane) rows.push_back(vec_to_json(row));
    h.push_back(rows);
  }
  return {{"n", gp.n()},
          {"kernel_basis", kernel},
          {"e", vec_to_json(gp.projection.e)},
          {"terms", poly_to_json(gp.poly)},
          {"g", matrix_to_json(gp.g)},
          {"h", h}};
}

Vec point_from_json(const json& doc, const GraphPoly* gp, std::size_t dim) {
  return guarded("invalid point document", [&] {
    if (doc.contains("coords")) return vec_from_json(doc.at("coords"), dim);
    if (!doc.contains("graph_params")) throw MalformedInput("point needs \"coords\" or \"graph_params\"");
    if (gp == nullptr) throw MalformedInput("graph parameters need n >= 1");
    return graph_point(*gp, vec_from_json(doc.at("graph_params"), gp->n()));
  });
}

}  // namespace gorenstein::io
