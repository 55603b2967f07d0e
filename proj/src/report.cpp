#include "qgauss/report.hpp"

#include <json.hpp>

namespace qgauss {

namespace {

nlohmann::ordered_json to_ordered_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["checked"] = r.checked;
    j["holds"] = r.holds;
    if (r.first_counterexample) {
        nlohmann::ordered_json params;
        for (const auto& [key, value] : r.first_counterexample->parameters) {
            params[key] = value;
        }
        j["first_counterexample"] = {{"parameters", params},
                                     {"lhs", r.first_counterexample->lhs},
                                     {"rhs", r.first_counterexample->rhs}};
    } else {
        j["first_counterexample"] = nullptr;
    }
    return j;
}

}  // namespace

std::string VerificationReport::to_json(int indent) const {
    return to_ordered_json(*this).dump(indent);
}

}  // namespace qgauss
