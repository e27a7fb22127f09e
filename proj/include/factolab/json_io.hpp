#pragma once

// JSON interchange. Rationals travel as strings "p/q" or "n"; integer
// vectors as JSON numbers (strings when they do not fit in 64 bits).

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "factolab/classify.hpp"
#include "factolab/construct.hpp"
#include "factolab/errors.hpp"
#include "factolab/monoid.hpp"
#include "factolab/semiring.hpp"

namespace factolab::json_io {

using Json = nlohmann::ordered_json;

/// Throws ParseError carrying the byte offset of the first syntax error.
Json parse_text(std::string_view text);
Json read_file(const std::string& path);

Json rational_to_json(const Rational& q);
/// Accepts a string "p/q" or a JSON integer.
Rational rational_from_json(const Json& j);
Json integer_vector_to_json(const IntVector& v);
Json int64_vector_to_json(const std::vector<std::int64_t>& v);
Json rational_vector_to_json(const RationalVector& v);
RationalVector rational_vector_from_json(const Json& j);

Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json relation_to_json(const FactorizationRelation& rel, const Presentation& p);
/// Kernel vector plus the relation and element it certifies.
Json kernel_witness_to_json(const IntVector& z, const Presentation& p);
Json report_to_json(const ClassificationReport& report, const Presentation& p);

Json expected_to_json(const ExpectedVerdicts& e);
Json fixture_to_json(const Fixture& f);

Json polynomial_to_json(const SemiringPolynomial& f);
SemiringPolynomial polynomial_from_json(const Json& j);
Json formal_factorization_to_json(const FormalFactorization& z);
Json algebra_witness_to_json(const AlgebraWitness& w);

/// {"error": kind, "message": ...} plus any witness data the error carries.
Json error_to_json(const Error& e);

}  // namespace factolab::json_io
