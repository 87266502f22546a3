// JSON encodings of the report types (nlohmann::json), plus the parsers used
// by the round-trip tests.
#ifndef NSEMI_JSON_IO_HPP
#define NSEMI_JSON_IO_HPP

#include <json.hpp>

#include "nsemi/enumerate.hpp"
#include "nsemi/idealization.hpp"

namespace nsemi {

nlohmann::json to_json(const NumericalSemigroup& H);
nlohmann::json to_json(const RelativeIdeal& E);  // {offset, members: window true-positions}
nlohmann::json to_json(const HilbertTable& t);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const IdealizationReport& r);
nlohmann::json to_json(const SurveyReport& r);
nlohmann::json to_json(const Violation& v);

/// Rebuilds the semigroup from the generators field and verifies the cached
/// invariants in the JSON agree; throws errc::bad_input otherwise.
SgPtr parse_semigroup(const nlohmann::json& j);

/// Rebuilds the ideal from {offset, members}; members are absolute element
/// values, so members + H reproduces the set exactly.
RelativeIdeal parse_relideal(const nlohmann::json& j, const SgPtr& parent);

/// Reconstructs a full report (the canonical ideal is re-derived from the
/// semigroup; it is determined by it).
ClassificationReport parse_classification(const nlohmann::json& j);

IdealizationReport parse_idealization(const nlohmann::json& j);
SurveyReport parse_survey(const nlohmann::json& j);

}  // namespace nsemi

#endif
