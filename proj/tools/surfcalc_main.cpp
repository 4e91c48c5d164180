#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "surfcalc/scenario.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> collect_configs(const std::vector<std::string>& inputs) {
    std::vector<fs::path> paths;
    for (const auto& in : inputs) {
        const fs::path p(in);
        if (fs::is_directory(p)) {
            std::vector<fs::path> found;
            for (const auto& e : fs::directory_iterator(p))
                if (e.path().extension() == ".cfg") found.push_back(e.path());
            std::sort(found.begin(), found.end());
            paths.insert(paths.end(), found.begin(), found.end());
        } else {
            paths.push_back(p);
        }
    }
    return paths;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surfcalc: moving-surface calculus and transport-theorem verification"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run scenario config files (or a directory of .cfg)");
    std::vector<std::string> inputs;
    surfcalc::RunOptions opt;
    int quad_order = 0;
    double fd_step = 0.0, tol = 0.0;
    bool json_out = false;
    run->add_option("paths", inputs, "config files or directories")->required();
    run->add_option("--jobs", opt.jobs, "parallel scenario jobs")->default_val(1);
    run->add_option("--quad-order", quad_order, "override quadrature order");
    run->add_option("--fd-step", fd_step, "override finite-difference step");
    run->add_option("--tol", tol, "override tolerance");
    run->add_option("--out", opt.out_dir, "output directory (default $SURFCALC_OUT or 'out')");
    run->add_flag("--json", json_out, "print the full report as JSON to stdout");

    auto* list = app.add_subcommand("list", "list the chart/field/scenario catalog");
    bool list_json = false;
    list->add_flag("--json", list_json, "machine-readable listing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (list->parsed()) {
        std::cout << (list_json ? surfcalc::catalog_json() : surfcalc::catalog_text());
        return surfcalc::kExitPass;
    }

    if (quad_order > 0) opt.quad_order = quad_order;
    if (run->count("--fd-step")) opt.fd_step = fd_step;
    if (run->count("--tol")) opt.tol = tol;
    if (opt.out_dir.empty()) {
        const char* env = std::getenv("SURFCALC_OUT");
        opt.out_dir = env ? env : "out";
    }

    try {
        const auto paths = collect_configs(inputs);
        if (paths.empty()) {
            std::cerr << "error: no config files found\n";
            return surfcalc::kExitConfigError;
        }
        const surfcalc::RunReport report = surfcalc::run_config_files(paths, opt);
        if (json_out) {
            std::cout << report.to_json().dump(2) << "\n";
        } else {
            for (const auto& r : report.scenarios) {
                std::cout << (r.pass() ? "PASS" : "FAIL") << "  " << r.scenario << "  (" << r.kind
                          << ", worst residual " << r.max_judged() << ")\n";
                if (!r.pass())
                    for (const auto& c : r.checks)
                        if (!c.pass)
                            std::cout << "      " << c.name << ": lhs=" << c.lhs << " rhs=" << c.rhs
                                      << " residual=" << c.judged() << " tol=" << c.tolerance << "\n";
            }
            std::cout << (report.pass() ? "all checks passed" : "FAILURES present") << "; report in "
                      << opt.out_dir << "/report.json\n";
        }
        return report.pass() ? surfcalc::kExitPass : surfcalc::kExitResidualFailure;
    } catch (const surfcalc::ConfigParse& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return surfcalc::kExitConfigError;
    } catch (const surfcalc::UnknownCatalogEntry& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return surfcalc::kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return surfcalc::kExitRuntimeError;
    }
}
