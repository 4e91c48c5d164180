#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

namespace surfcalc {

inline constexpr double kResidualFloor = 1e-14;

/// rel = |lhs - rhs| / max(|lhs|, |rhs|, floor)
inline double relative_residual(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), kResidualFloor});
}

/// One verified identity: left and right side, residuals and the pinned
/// tolerance it is judged against.
struct CheckResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tolerance = 0.0;
    bool absolute = false;  // judge abs_residual instead of rel_residual
    bool pass = true;

    double judged() const { return absolute ? abs_residual : rel_residual; }
};

inline CheckResult make_check(std::string name, double lhs, double rhs, double tol,
                              bool absolute = false) {
    CheckResult c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.abs_residual = std::abs(lhs - rhs);
    c.rel_residual = relative_residual(lhs, rhs);
    c.tolerance = tol;
    c.absolute = absolute;
    c.pass = c.judged() <= tol;
    return c;
}

/// Per-scenario record of every verified form of a theorem or condition.
struct ResidualReport {
    std::string scenario;
    std::string kind;
    int quad_order = 0;
    double fd_step = 0.0;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }
    double max_judged() const {
        double m = 0.0;
        for (const auto& c : checks) m = std::max(m, c.judged());
        return m;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }

    nlohmann::ordered_json to_json() const;
};

/// Whole-run report: config echo, per-scenario reports, summary. The schema
/// tag is versioned and pinned by the acceptance tests; the timestamp is the
/// only non-deterministic field.
struct RunReport {
    static constexpr const char* kSchema = "surfcalc-report/v1";

    std::vector<std::pair<std::string, std::string>> config_echo;  // per scenario: (name, raw text)
    std::vector<ResidualReport> scenarios;
    std::string timestamp;

    bool pass() const {
        return std::all_of(scenarios.begin(), scenarios.end(),
                           [](const ResidualReport& r) { return r.pass(); });
    }
    nlohmann::ordered_json to_json() const;
};

/// Row of the h/order-refinement series emitted next to report.json.
struct SeriesRow {
    std::string scenario;
    std::string check;
    std::string parameter;  // "fd_step" or "quad_order"
    double parameter_value = 0.0;
    double lhs = 0.0, rhs = 0.0, abs_residual = 0.0, rel_residual = 0.0;
};

std::string series_csv(const std::vector<SeriesRow>& rows);

}  // namespace surfcalc
