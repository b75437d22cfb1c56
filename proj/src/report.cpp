#include "gpmfix/report.hpp"

#include <json.hpp>

namespace gpmfix {

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["axiom"] = axiom;
    j["n"] = samples;
    j["tol"] = tol;
    j["pass"] = pass();
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations) {
        j["violations"].push_back({{"axiom", v.axiom},
                                   {"inputs", v.inputs},
                                   {"lhs", v.lhs},
                                   {"rhs", v.rhs}});
    }
    if (!notes.empty()) j["notes"] = notes;
    if (max_ratio) j["max_ratio"] = *max_ratio;
    return j.dump(2);
}

}  // namespace gpmfix
