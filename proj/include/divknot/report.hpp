// JSON and plain-text renderings of divide-knot computations.
#ifndef DIVKNOT_REPORT_HPP
#define DIVKNOT_REPORT_HPP

#include "divknot/defect.hpp"

#include <json.hpp>

#include <string>

namespace divknot {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& value);
BigInt bigint_from_json(const Json& value);

/// [[exponent, coefficient], ...] sorted by exponent.
Json to_json(const Laurent& poly);
Laurent laurent_from_json(const Json& value);

/// Array of rows.
Json to_json(const IntMatrix& matrix);
IntMatrix matrix_from_json(const Json& value, Eigen::Index columns_if_empty = 0);

Json to_json(const Generator& generator);
Json to_json(const InvariantSet& invariants);

/// Vectors, restricted matrix, unit and bound: enough to re-verify the
/// certificate without repeating the search.
Json to_json(const DefectCertificate& certificate);
DefectCertificate certificate_from_json(const Json& value, Eigen::Index ambient_dimension);

/// Full report with top-level keys divide, basis, seifert_matrix, invariants,
/// g4top and certificates.
Json report_json(const DivideDiagram& diagram, const SeifertData& data, const BoundsReport& bounds);

std::string report_text(const DivideDiagram& diagram, const SeifertData& data, const BoundsReport& bounds);

/// Canonical serialisation used for every JSON document we emit.
std::string dump(const Json& document);

}  // namespace divknot

#endif  // DIVKNOT_REPORT_HPP
