#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "surfcalc/balance.hpp"
#include "surfcalc/chart.hpp"
#include "surfcalc/fields.hpp"
#include "surfcalc/moving.hpp"
#include "surfcalc/report.hpp"
#include "surfcalc/transport.hpp"

namespace surfcalc {

/// Flat key-value config with dotted keys. Lines are `key = value`; `#` starts
/// a comment; values are numbers or bare strings. Parse errors carry the line
/// number.
class ConfigMap {
public:
    static ConfigMap parse_string(const std::string& text, const std::string& origin = "<string>");
    static ConfigMap parse_file(const std::filesystem::path& path);

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    std::string get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& def) const;
    double number(const std::string& key) const;
    double number_or(const std::string& key, double def) const;
    int integer_or(const std::string& key, int def) const;

    const std::string& origin() const { return origin_; }
    const std::string& raw_text() const { return raw_; }

private:
    std::map<std::string, std::string> kv_;
    std::string origin_;
    std::string raw_;
};

// --- catalogs -------------------------------------------------------------------

struct CatalogEntry {
    std::string name;
    std::string signature;  // e.g. "sphere(R)"
};

std::vector<CatalogEntry> chart_catalog();
std::vector<CatalogEntry> moving_chart_catalog();
std::vector<CatalogEntry> scalar_field_catalog();
std::vector<CatalogEntry> vector_field_catalog();
std::vector<CatalogEntry> flow_catalog();
std::vector<CatalogEntry> scenario_kind_catalog();

/// Chart by catalog name; parameters come from config keys `prefix.<param>`.
/// Throws UnknownCatalogEntry.
std::shared_ptr<Chart> make_catalog_chart(const std::string& name, const ConfigMap& cfg,
                                          const std::string& prefix = "chart");
std::shared_ptr<AmbientScalarField> make_catalog_scalar_field(const std::string& name,
                                                              const ConfigMap& cfg,
                                                              const std::string& prefix = "field");
std::shared_ptr<AmbientVectorField> make_catalog_vector_field(const std::string& name,
                                                              const ConfigMap& cfg,
                                                              const std::string& prefix = "field");
std::shared_ptr<FlowMap> make_catalog_flow(const std::string& name, const ConfigMap& cfg,
                                           const std::string& prefix = "flow");
PiecewiseVolumeScenario make_catalog_piecewise(const std::string& name, const ConfigMap& cfg);
InterfaceScenario make_catalog_interface(const std::string& name, const ConfigMap& cfg);

std::string catalog_text();
std::string catalog_json();

// --- runner ---------------------------------------------------------------------

struct RunOptions {
    int jobs = 1;
    std::optional<int> quad_order;
    std::optional<double> fd_step;
    std::optional<double> tol;
    std::string out_dir;  // empty: no files written
    bool json_stdout = false;
};

struct ScenarioOutput {
    ResidualReport report;
    std::vector<SeriesRow> series;
    std::optional<Sim1DResult> sim1d;  // time series for simulate-1d scenarios
};

/// Dispatches one parsed config to the matching verifier.
ScenarioOutput run_scenario(const ConfigMap& cfg, const RunOptions& opt);

/// Runs every config (a file each), scenarios in parallel up to opt.jobs,
/// reports assembled in input order. Writes report.json / series.csv /
/// sim1d_<scenario>.csv into opt.out_dir when set.
RunReport run_config_files(const std::vector<std::filesystem::path>& paths, const RunOptions& opt);

/// Exit-code contract: 0 all pass, 1 residual failure, 2 config error,
/// 3 runtime or numerical error.
enum ExitCode : int { kExitPass = 0, kExitResidualFailure = 1, kExitConfigError = 2, kExitRuntimeError = 3 };

}  // namespace surfcalc
