#include "surfcalc/report.hpp"

#include <sstream>

namespace surfcalc {

nlohmann::ordered_json ResidualReport::to_json() const {
    nlohmann::ordered_json j;
    j["scenario"] = scenario;
    j["kind"] = kind;
    j["quad_order"] = quad_order;
    j["fd_step"] = fd_step;
    j["pass"] = pass();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["lhs"] = c.lhs;
        cj["rhs"] = c.rhs;
        cj["abs_residual"] = c.abs_residual;
        cj["rel_residual"] = c.rel_residual;
        cj["tolerance"] = c.tolerance;
        cj["tolerance_mode"] = c.absolute ? "absolute" : "relative";
        cj["pass"] = c.pass;
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["pass"] = pass();
    auto cfg = nlohmann::ordered_json::array();
    for (const auto& [name, text] : config_echo) {
        nlohmann::ordered_json e;
        e["scenario"] = name;
        e["config"] = text;
        cfg.push_back(std::move(e));
    }
    j["configs"] = std::move(cfg);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : scenarios) arr.push_back(r.to_json());
    j["scenarios"] = std::move(arr);
    j["timestamp"] = timestamp;
    return j;
}

std::string series_csv(const std::vector<SeriesRow>& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "scenario,check,parameter,parameter_value,lhs,rhs,abs_residual,rel_residual\n";
    for (const auto& r : rows)
        os << r.scenario << ',' << r.check << ',' << r.parameter << ',' << r.parameter_value << ','
           << r.lhs << ',' << r.rhs << ',' << r.abs_residual << ',' << r.rel_residual << '\n';
    return os.str();
}

}  // namespace surfcalc
