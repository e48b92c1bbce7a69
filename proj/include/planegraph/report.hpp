#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "planegraph/charging.hpp"
#include "planegraph/constructions.hpp"
#include "planegraph/enumerate.hpp"
#include "planegraph/verify.hpp"

namespace planegraph {

inline constexpr const char* kToolName = "planegraph";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSegmentIndexing =
    "segments (i,j) with i<j in lexicographic order; edge hex is the edge set as a hex integer "
    "(bit k = segment k), most significant digit first";

using Json = nlohmann::ordered_json;

/// {"num": "...", "den": "..."} in lowest terms.
Json rational_json(const mpq_class& q);

/// Tool version, input fingerprint and segment-indexing convention.
Json report_header(const Universe& u);

Json count_json(const Universe& u, const mpz_class& pg);
Json degrees_json(const Universe& u, const DegreeExpectation& d);
/// One row per degree: i, ving_count, vhat_numerator, vhat_denominator.
std::string degrees_csv(const DegreeExpectation& d);

Json triangulations_json(const Universe& u, const TriangulationStats& stats);
std::string triangulations_csv(const Universe& u, const TriangulationStats& stats);

Json charge_audit_json(const Universe& u, const ChargeAudit& audit);
/// point, visibility_j, multiplicity.
std::string family_census_csv(const FamilyCensus& census);

Json verification_json(const VerificationReport& r);
Json verification_document(const Universe* u, const std::vector<VerificationReport>& reports);

std::string construction_report_csv(const std::vector<ConstructionRow>& rows);
Json construction_report_json(const std::vector<ConstructionRow>& rows);

}  // namespace planegraph
