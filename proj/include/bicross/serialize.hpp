#pragma once

#include <json.hpp>

#include "bicross/bialgebra.hpp"
#include "bicross/catalog.hpp"
#include "bicross/cohomology.hpp"

namespace bicross {

using Json = nlohmann::json;

inline constexpr int kAlgebraSchemaVersion = 1;

Json scalar_json(const Scalar& q);
// Accepts "p/q" strings and integers.
Scalar scalar_from_json(const Json& j);

Json vector_json(const Vector& v);
Json matrix_json(const Matrix& m);  // array of rows
Json params_json(const Params& p);

// {schema, version, dim, labels, c}; c[i][j][k] is the e_k coefficient of [e_i, e_j].
Json algebra_json(const LieAlgebra& g);
// Throws std::invalid_argument on a malformed document or a version mismatch.
LieAlgebra algebra_from_json(const Json& j);

// Algebra document of g1 plus {name, params, chi, beta}.
Json catalog_entry_json(const CatalogEntry& e);
NPlus1Data nplus1_from_json(const Json& j);

// Algebra document plus {cobracket, params}; cobracket[i][j][k] as for c.
Json bialgebra_json(const LieBialgebra& b);
LieBialgebra bialgebra_from_json(const Json& j);

Json cohomology_json(const CohomologyResult& r);

}  // namespace bicross
