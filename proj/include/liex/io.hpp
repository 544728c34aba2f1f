#pragma once

#include "liex/contraction.hpp"
#include "liex/identify.hpp"
#include "liex/search.hpp"
#include "liex/semigroup.hpp"
#include "liex/structure_tensor.hpp"

#include <json.hpp>

#include <string>

namespace liex {

using Json = nlohmann::ordered_json;

// Every parser below throws InputError on malformed input.

Json rational_to_json(const Rational& q);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);

/// {"dim": n, "brackets": [{"i": 1, "j": 2, "coeffs": {"1": "1"}}, ...]}, 1-based,
/// one entry per nonzero [e_i, e_j] with i < j (plus any non-antisymmetric extras).
Json tensor_to_json(const StructureTensorQ& c);
/// A bracket listed only as (i, j) gets its (j, i) counterpart by antisymmetry;
/// listing both keeps both verbatim, so non-antisymmetric input can be validated.
StructureTensorQ tensor_from_json(const Json& j);

/// {"order": N, "table": [[...]]} with 1-based entries.
Json semigroup_to_json(const SemigroupTable& s);
SemigroupTable semigroup_from_json(const Json& j);

Json matrix_to_json(const MatrixQ& m);
MatrixQ matrix_from_json(const Json& j);
Json vector_to_json(const VectorQ& v);

/// {"dim": n, "entries": {"i,j": {"exp": "coef"}}}, 1-based.
Json family_to_json(const LaurentBasisFamily& u);
LaurentBasisFamily family_from_json(const Json& j);

/// Entries as rendered rational functions of eps.
Json laurent_tensor_to_json(const LaurentTensor& t);

Json identification_to_json(const Identification& id);
Json witness_to_json(const Witness& w);
Json space_to_json(const SpaceSize& s);

/// Rows of the vectors named by "E1,E2,E6", "E1-E2,E3", "2E1+1/2E3" in
/// an n-dimensional algebra (1-based indices).
MatrixQ parse_span(const std::string& text, Eigen::Index n);

}  // namespace liex
