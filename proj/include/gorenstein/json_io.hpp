#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gorenstein/oracle.hpp"
#include "gorenstein/resolution.hpp"

// JSON forms of the library values. Scalars are always strings ("-5/2", "17").

namespace gorenstein {

using Json = nlohmann::ordered_json;

/// {"field": "Q" | "Fp:<p>", "degree": d, "coeffs": {"a,b,c": "scalar", ...}};
/// zero coefficients are omitted.
Json to_json(const DualElement& w);
/// Throws std::invalid_argument on malformed input.
DualElement dual_from_json(const Json& j);

Json to_json(const FieldMatrix& m);
FieldMatrix field_matrix_from_json(const Field& field, const Json& j);

Json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Field& field, int degree, const Json& j);

Json to_json(const std::vector<Polynomial>& row);

/// Writes m as factor * (integer matrix): {"factor": "1/70", "entries": [...]},
/// factor = 1 / lcm of all denominators. Over a prime field the factor is 1.
Json cleared_json(const FieldMatrix& m);
Json cleared_json(const PolyMatrix& m);

struct ReportOptions {
  bool clear_denominators = false;
};

Json to_json(const LinearPresentation& lin, const ReportOptions& options = {});
Json to_json(const QuadraticPresentation& quad, const ReportOptions& options = {});
/// Full report: {"n", "field", "linear": ..., "quadratic": ... (when built)}.
Json resolution_report(const LinearPresentation& lin, const std::optional<QuadraticPresentation>& quad,
                       const ReportOptions& options = {});

Json to_json(const GradedIdealSummary& summary, bool include_bases);
Json to_json(const LefschetzReport& report);

std::string status_name(QuadraticStatus status);

DualElement read_dual_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace gorenstein
