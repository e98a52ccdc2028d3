#include "bicross/serialize.hpp"

#include <stdexcept>

namespace bicross {

namespace {

Json cube_json(const std::vector<Scalar>& flat, std::size_t n) {
  Json c = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < n; ++k) row.push_back(scalar_json(flat[(i * n + j) * n + k]));
      plane.push_back(std::move(row));
    }
    c.push_back(std::move(plane));
  }
  return c;
}

std::vector<Scalar> cube_from_json(const Json& c, std::size_t n) {
  if (!c.is_array() || c.size() != n) throw std::invalid_argument("constants: expected " + std::to_string(n) + " planes");
  std::vector<Scalar> flat;
  for (const auto& plane : c) {
    if (!plane.is_array() || plane.size() != n) throw std::invalid_argument("constants: bad plane");
    for (const auto& row : plane) {
      if (!row.is_array() || row.size() != n) throw std::invalid_argument("constants: bad row");
      for (const auto& v : row) flat.push_back(scalar_from_json(v));
    }
  }
  return flat;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field: ") + key);
  return j.at(key);
}

void check_header(const Json& j, const std::string& schema) {
  if (field(j, "schema") != schema) throw std::invalid_argument("expected schema " + schema);
  if (field(j, "version") != kAlgebraSchemaVersion) throw std::invalid_argument("unsupported version");
}

Params params_from_json(const Json& j) {
  Params p;
  for (const auto& [k, v] : j.items()) p[k] = scalar_from_json(v);
  return p;
}

}  // namespace

Json scalar_json(const Scalar& q) { return to_string(q); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw std::invalid_argument("expected a rational as \"p/q\"");
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r)));
  return a;
}

Json params_json(const Params& p) {
  Json o = Json::object();
  for (const auto& [k, v] : p) o[k] = scalar_json(v);
  return o;
}

Json algebra_json(const LieAlgebra& g) {
  return {{"schema", "bicross.algebra"},
          {"version", kAlgebraSchemaVersion},
          {"dim", g.dim()},
          {"labels", g.labels()},
          {"c", cube_json(g.constants(), g.dim())}};
}

LieAlgebra algebra_from_json(const Json& j) {
  if (field(j, "schema") != "bicross.algebra" && field(j, "schema") != "bicross.bialgebra" &&
      field(j, "schema") != "bicross.catalog-entry")
    throw std::invalid_argument("not an algebra document");
  if (field(j, "version") != kAlgebraSchemaVersion) throw std::invalid_argument("unsupported version");
  std::size_t n = field(j, "dim").get<std::size_t>();
  auto labels = field(j, "labels").get<std::vector<std::string>>();
  if (labels.size() != n) throw std::invalid_argument("labels and dim disagree");
  return LieAlgebra(labels, cube_from_json(field(j, "c"), n));
}

Json catalog_entry_json(const CatalogEntry& e) {
  Json j = algebra_json(e.data.g1);
  j["schema"] = "bicross.catalog-entry";
  j["name"] = e.name;
  j["params"] = params_json(e.params);
  j["generator"] = e.data.generator;
  j["chi"] = vector_json(e.data.chi);
  j["beta"] = matrix_json(e.data.beta);
  return j;
}

NPlus1Data nplus1_from_json(const Json& j) {
  check_header(j, "bicross.catalog-entry");
  NPlus1Data d;
  d.g1 = algebra_from_json(j);
  std::size_t n = d.g1.dim();
  for (const auto& v : field(j, "chi")) d.chi.push_back(scalar_from_json(v));
  if (d.chi.size() != n) throw std::invalid_argument("chi has the wrong length");
  const Json& beta = field(j, "beta");
  if (!beta.is_array() || beta.size() != n) throw std::invalid_argument("beta has the wrong shape");
  d.beta = Matrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!beta[r].is_array() || beta[r].size() != n) throw std::invalid_argument("beta has the wrong shape");
    for (std::size_t c = 0; c < n; ++c) d.beta(r, c) = scalar_from_json(beta[r][c]);
  }
  if (j.contains("generator")) d.generator = j.at("generator").get<std::string>();
  return d;
}

Json bialgebra_json(const LieBialgebra& b) {
  Json j = algebra_json(b.algebra());
  j["schema"] = "bicross.bialgebra";
  j["cobracket"] = cube_json(b.cobracket(), b.dim());
  j["params"] = params_json(b.params());
  return j;
}

LieBialgebra bialgebra_from_json(const Json& j) {
  check_header(j, "bicross.bialgebra");
  LieAlgebra g = algebra_from_json(j);
  Params p = j.contains("params") ? params_from_json(j.at("params")) : Params{};
  return LieBialgebra(g, cube_from_json(field(j, "cobracket"), g.dim()), p);
}

Json cohomology_json(const CohomologyResult& r) {
  Json j = {{"cocycle_dim", r.cocycles.size()},
            {"coboundary_dim", r.coboundaries.size()},
            {"ext_dim", r.ext_dim},
            {"generator", nullptr}};
  if (r.generator) j["generator"] = matrix_json(r.generator->form);
  return j;
}

}  // namespace bicross
