#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "arrpair/arrangement.hpp"
#include "arrpair/pairing.hpp"

namespace arrpair {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings ("2/3"); JSON integers are accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_to_json(const QVector& v);
QVector vector_from_json(const Json& j);
/// Nested array of rationals, all rows of equal length.
QMatrix matrix_from_json(const Json& j);

/// {"ambient_dim": m, "hyperplanes": [{"normal": [...], "offset": "..."}]}
Json arrangement_to_json(const Arrangement& arr);
/// Throws ParseError for schema violations and PreconditionError for
/// invalid arrangements (e.g. "zero normal at index k").
Arrangement arrangement_from_json(const Json& j);

std::string serialize_arrangement(const Arrangement& arr);
Arrangement parse_arrangement(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);
Arrangement load_arrangement(const std::filesystem::path& path);

Json certificate_to_json(const DefinitenessCertificate& cert);
DefinitenessCertificate certificate_from_json(const Json& j);

Json int_matrix_to_json(const IntMatrix& M);
IntMatrix int_matrix_from_json(const Json& j);

/// Report file: matrices as nested integer arrays, minors and witnesses as
/// rational strings.
Json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

}  // namespace arrpair
