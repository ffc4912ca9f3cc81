#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace galilei::report {

using Json = nlohmann::ordered_json;

/// Every report embeds the command echo, the global sign convention and a
/// top-level "pass" verdict; exact values are rendered as strings.
Json reps_list();
Json reps_check(const std::string& label_or_all);
Json reps_indecomposable(const std::string& label);
Json contract_report(const std::string& scheme_name, const std::string& rep_name,
                     const std::optional<std::string>& scheme_file_text);
Json covariance_report(const std::string& system_or_all);
Json reduce_report(const std::string& system, const std::vector<std::string>& zero,
                   const std::vector<std::string>& drop);
Json potentials_report(const std::string& scheme);
Json limits_report(const std::string& scheme, const std::string& target,
                   const std::vector<double>& eps);
Json catalog_export_report(const std::string& system);

bool report_passes(const Json& j);
std::string render_text(const Json& j);

}  // namespace galilei::report
