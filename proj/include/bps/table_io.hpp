#pragma once

// JSON forms of the tables, series and ring elements the CLI reads and writes.
// Rationals are always "p/q" strings. Objects use ordered keys so output is
// byte-stable.

#include <optional>
#include <string>

#include <json.hpp>

#include "bps/gv_transform.hpp"
#include "bps/jfunction.hpp"
#include "bps/laurent.hpp"
#include "bps/qrf.hpp"

namespace bps::io {

using Json = nlohmann::ordered_json;

/// Schema problems (missing/unknown fields, wrong types, negative genus,
/// malformed rationals, duplicates) throw InputError; entries outside the
/// declared bounds or of the wrong rank throw DomainError. Messages name the
/// offending entry.
InvariantTable table_from_json(const Json& doc);
Json table_to_json(const InvariantTable& table, const std::optional<std::string>& comment = std::nullopt);

Json integrality_to_json(const IntegralityReport& report);

/// {"variable", "min_exponent", "truncation_order", "coefficients": [...], "text"}
Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& doc);
Json series_to_json(const QSeries& s);
QSeries qseries_from_json(const Json& doc);

/// {"numerator": [...], "denominator": [...], "text"} with ascending coefficients.
Json qrf_to_json(const QRationalFunction& f);
QRationalFunction qrf_from_json(const Json& doc);

/// {"ring", "coordinates": [{"basis", "exact"[, "series"]}]}; series only when q_order >= 0.
Json kelem_to_json(const QElem& e, int q_order = -1);

/// {"vectors": [[int, ...], ...]}
DivisorPairing pairing_from_json(const Json& doc);

Json jmgs_to_json(const JmgsRhs& rhs);
Json split_report_to_json(const SplitCheckReport& report);

/// Reads and parses a JSON file; unreadable files and syntax errors throw InputError.
Json read_json_file(const std::string& path);
/// Canonical text of a document: two-space indent, trailing newline.
std::string dump(const Json& doc);

}  // namespace bps::io
