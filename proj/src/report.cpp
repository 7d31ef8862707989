#include "sylv/report.hpp"

#include <json.hpp>

namespace sylv {

IdentityReport make_report(std::string identity, std::vector<std::pair<std::string, std::string>> params,
                           const Rat& lhs, const Rat& rhs, std::string notes) {
    IdentityReport report;
    report.identity = std::move(identity);
    report.params = std::move(params);
    report.lhs = lhs;
    report.rhs = rhs;
    report.holds = (lhs == rhs);
    report.notes = std::move(notes);
    return report;
}

std::string IdentityReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) p[key] = value;
    j["params"] = p;
    j["lhs"] = lhs.str();
    j["rhs"] = rhs.str();
    j["holds"] = holds;
    j["notes"] = notes;
    return j.dump();
}

}  // namespace sylv
