#pragma once

// JSON forms of series, ideal specs, multi-sum specs, equations and reports.
// Loaders throw ParseError for malformed documents and InvalidSpec when the
// document parses but describes an invalid object.

#include <string>

#include "json.hpp"
#include "qlink/agsum.hpp"
#include "qlink/lpi.hpp"
#include "qlink/partitions.hpp"
#include "qlink/qde.hpp"
#include "qlink/series.hpp"

namespace qlink {

using Json = nlohmann::json;

/// [[e_q, e_x, e_y, "coefficient"], ...] in monomial order.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

/// {"order": N, "terms": [...]}
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

/// {"modulus", "blocks", "linking": {"k": [...]}, "stats": {"x", "y"}} with 1-based block indices.
Json ideal_to_json(const IdealSpec& spec);
IdealSpec ideal_from_json(const Json& j);

/// {"r", "Q", "L2", "L1", "wx", "wy", "bases"}; rationals as strings like "3/2".
Json agspec_to_json(const AGSpec& spec);
AGSpec agspec_from_json(const Json& j);

Json qde_to_json(const QDifferenceEquation& eq);
QDifferenceEquation qde_from_json(const Json& j);

Json recurrence_to_json(const CoefficientRecurrence& rec);
CoefficientRecurrence recurrence_from_json(const Json& j);

/// [{"M": m, "first_nonzero_monomial": [e_q, e_x, e_y] or null}, ...]
Json residual_report_to_json(const ResidualReport& r);

/// [{"m": m, "n": n, "count": c}, ...]
Json stat_table_to_json(const StatTable& t);

Json monomial_to_json(const Monomial& m);

/// Reads and parses a JSON file; throws ParseError.
Json load_json_file(const std::string& path);

}  // namespace qlink
