// JSON documents for reports and survey tables. Key order is fixed.

#ifndef CUTGROUPS_REPORT_JSON_HPP_
#define CUTGROUPS_REPORT_JSON_HPP_

#include <json.hpp>

#include "cutgroups/surveys.hpp"

namespace cutgroups {

using Json = nlohmann::ordered_json;

// Integers that do not fit in 64 bits are written as decimal strings.
Json count_json(Count value);

Json report_json(const GroupReport& report);
Json usr_json(const UsrSet& usr);
Json flags_json(const RationalityFlags& flags);
Json survey_row_json(const SurveyRow& row);
Json alternating_row_json(const AlternatingRow& row);
Json gk_json(const GKGraph& graph, std::optional<char> label);

// Human-readable multi-line summary.
std::string report_text(const GroupReport& report);

} // namespace cutgroups

#endif // CUTGROUPS_REPORT_JSON_HPP_
