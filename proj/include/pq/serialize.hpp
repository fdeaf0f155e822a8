#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "pq/bounds.hpp"
#include "pq/clique.hpp"
#include "pq/family.hpp"
#include "pq/instances.hpp"
#include "pq/pierce.hpp"

namespace pq {

using Json = nlohmann::json;

inline constexpr int kFileVersion = 1;
inline constexpr const char* kFamilyFormat = "pq-family";
inline constexpr const char* kPointsFormat = "pq-points";

/// Family file:
///   {"format": "pq-family", "version": 1,
///    "bodies": [{"id": 0, "vertices": [["x_num/x_den", "y_num/y_den"], ...]}, ...],
///    "metadata": {...}}
/// A body may also be given as a bare vertex array; its id is then its index.
Json family_to_json(const Family& family, const Json& metadata = Json::object());
Family family_from_json(const Json& doc);

/// Points file: {"format": "pq-points", "version": 1,
///               "points": [["x", "y", "weight"], ...], "metadata": {...}}
Json points_to_json(const WeightedPoints& points, const Json& metadata = Json::object());
WeightedPoints points_from_json(const Json& doc);

/// Parses JSON text; syntax errors become ParseError("line N", ...).
Json parse_json_text(std::string_view text);

Json gen_spec_to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const Json& doc);

/// Emits a generated family or point set in its file format, including the
/// generator spec as metadata.
Json generated_to_json(const GenSpec& spec, const Generated& g);

/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

/// Hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

void to_json(Json& j, const Rational& r);
void to_json(Json& j, const Point2& p);
void to_json(Json& j, const TupleStats& s);
void to_json(Json& j, const PQDecision& d);
void to_json(Json& j, const DichotomyResult& d);
void to_json(Json& j, const PiercingSet& s);
void to_json(Json& j, const WeightedPoints& w);
void to_json(Json& j, const LPResult& r);
void to_json(Json& j, const WeakNet& n);
void to_json(Json& j, const PipelineReport& r);
void to_json(Json& j, const BoundReport& r);
void to_json(Json& j, const WeakNetRelation& r);
void to_json(Json& j, const UnionComplexityReport& r);
void to_json(Json& j, const UnionConditionResult& r);
void to_json(Json& j, const ExactlyTwoUnionRecord& r);
void to_json(Json& j, const TripleForcingRecord& r);
void to_json(Json& j, const CliqueApproxReport& r);
void to_json(Json& j, const IntersectionGraph& g);

}  // namespace pq
