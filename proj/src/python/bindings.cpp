#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "surfcalc/balance.hpp"
#include "surfcalc/quadrature.hpp"
#include "surfcalc/scenario.hpp"
#include "surfcalc/surface_ops.hpp"
#include "surfcalc/transport.hpp"

namespace py = pybind11;
using namespace surfcalc;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::object: {
            py::dict d;
            for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
            return d;
        }
        case nlohmann::ordered_json::value_t::array: {
            py::list l;
            for (const auto& v : j) l.append(json_to_py(v));
            return l;
        }
        case nlohmann::ordered_json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::ordered_json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::ordered_json::value_t::number_integer:
        case nlohmann::ordered_json::value_t::number_unsigned:
            return py::int_(j.get<long long>());
        case nlohmann::ordered_json::value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

py::dict report_to_dict(const ResidualReport& r) {
    return json_to_py(r.to_json()).cast<py::dict>();
}

ConfigMap config_from_kwargs(const py::kwargs& kwargs) {
    std::string text;
    for (const auto& item : kwargs) {
        std::string key = py::str(item.first);
        // python identifiers cannot contain '.', so '__' stands in for it
        std::size_t pos = 0;
        while ((pos = key.find("__", pos)) != std::string::npos) {
            key.replace(pos, 2, ".");
            ++pos;
        }
        text += key + " = " + std::string(py::str(item.second)) + "\n";
    }
    return ConfigMap::parse_string(text, "<kwargs>");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Calculus of moving surfaces: geometry, surface operators, transport-theorem "
              "verification and interface balance laws.";

    py::register_exception<DegenerateChart>(m, "DegenerateChartError");
    py::register_exception<SingularMatrix>(m, "SingularMatrixError");
    py::register_exception<ZeroJump>(m, "ZeroJumpError");
    py::register_exception<UnknownCatalogEntry>(m, "UnknownCatalogEntryError");
    py::register_exception<ConfigParse>(m, "ConfigParseError");

    m.def("catalog", [] { return json_to_py(nlohmann::ordered_json::parse(catalog_json())); },
          "catalog of charts, fields, flows and scenario kinds");

    m.def(
        "frame",
        [](const std::string& chart_name, double u1, double u2, double t, const py::kwargs& kwargs) {
            const ConfigMap cfg = config_from_kwargs(kwargs);
            const auto chart = make_catalog_chart(chart_name, cfg);
            const SurfaceFrame fr = frame_at(*chart, t, {u1, u2});
            py::dict d;
            auto vec = [](const Vec3& v) { return py::make_tuple(v.x, v.y, v.z); };
            d["position"] = vec(fr.position);
            d["tau1"] = vec(fr.tau1);
            d["tau2"] = vec(fr.tau2);
            d["normal"] = vec(fr.normal);
            d["metric"] = py::make_tuple(fr.metric(0, 0), fr.metric(0, 1), fr.metric(1, 1));
            d["curvature"] = py::make_tuple(fr.curvature(0, 0), fr.curvature(0, 1), fr.curvature(1, 1));
            d["area_element"] = fr.area_element;
            d["mean_curvature"] = fr.mean_curvature;
            d["velocity"] = vec(fr.velocity);
            d["normal_speed"] = fr.normal_speed;
            return d;
        },
        py::arg("chart"), py::arg("u1"), py::arg("u2"), py::arg("t") = 0.0,
        "full geometric package of a catalog chart at a parameter point");

    m.def(
        "surface_area",
        [](const std::string& chart_name, double t, int order, const py::kwargs& kwargs) {
            const ConfigMap cfg = config_from_kwargs(kwargs);
            return surface_area(*make_catalog_chart(chart_name, cfg), t, order);
        },
        py::arg("chart"), py::arg("t") = 0.0, py::arg("order") = 32);

    m.def(
        "integrate_surface",
        [](const std::string& chart_name, const std::string& field_name, double t, int order,
           const py::kwargs& kwargs) {
            const ConfigMap cfg = config_from_kwargs(kwargs);
            return integrate_surface(*make_catalog_chart(chart_name, cfg),
                                     *make_catalog_scalar_field(field_name, cfg), t, order);
        },
        py::arg("chart"), py::arg("field"), py::arg("t") = 0.0, py::arg("order") = 32);

    m.def(
        "verify_surface_transport",
        [](const std::string& chart_name, const std::string& field_name, double t, int order,
           double fd_step, double tol, const py::kwargs& kwargs) {
            const ConfigMap cfg = config_from_kwargs(kwargs);
            return report_to_dict(verify_surface_transport(*make_catalog_chart(chart_name, cfg),
                                                           *make_catalog_scalar_field(field_name, cfg),
                                                           t, order, fd_step, tol));
        },
        py::arg("chart"), py::arg("field"), py::arg("t") = 0.0, py::arg("order") = 16,
        py::arg("fd_step") = 1e-4, py::arg("tol") = 1e-6);

    m.def(
        "verify_surface_divergence",
        [](const std::string& chart_name, const std::string& field_name, double t, int order,
           double tol, const py::kwargs& kwargs) {
            const ConfigMap cfg = config_from_kwargs(kwargs);
            return report_to_dict(verify_surface_divergence(*make_catalog_chart(chart_name, cfg),
                                                            *make_catalog_vector_field(field_name, cfg),
                                                            t, order, tol));
        },
        py::arg("chart"), py::arg("field"), py::arg("t") = 0.0, py::arg("order") = 32,
        py::arg("tol") = 1e-7);

    m.def(
        "verify_reynolds",
        [](const std::string& flow_name, const std::string& field_name, double t, int order,
           double fd_step, double tol, const py::kwargs& kwargs) {
            const ConfigMap cfg = config_from_kwargs(kwargs);
            const Box3 box{{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}};
            return report_to_dict(verify_reynolds(*make_catalog_flow(flow_name, cfg),
                                                  *make_catalog_scalar_field(field_name, cfg), box, t,
                                                  order, fd_step, tol));
        },
        py::arg("flow"), py::arg("field") = "constant", py::arg("t") = 0.0, py::arg("order") = 8,
        py::arg("fd_step") = 1e-4, py::arg("tol") = 1e-7);

    m.def(
        "verify_generalized_reynolds",
        [](const std::string& scenario, double t, int order, double fd_step, double tol,
           const py::kwargs& kwargs) {
            const ConfigMap cfg = config_from_kwargs(kwargs);
            return report_to_dict(
                verify_generalized_reynolds(make_catalog_piecewise(scenario, cfg), t, order, fd_step, tol));
        },
        py::arg("scenario"), py::arg("t") = 0.0, py::arg("order") = 16, py::arg("fd_step") = 1e-4,
        py::arg("tol") = 1e-6);

    m.def(
        "shock_speed_1d",
        [](double psi_l, double v_l, double j_l, double psi_r, double v_r, double j_r) {
            return shock_speed_1d({psi_l, v_l, j_l}, {psi_r, v_r, j_r});
        },
        py::arg("psi_left"), py::arg("v_left"), py::arg("j_left"), py::arg("psi_right"),
        py::arg("v_right"), py::arg("j_right"));

    m.def(
        "simulate_interface_1d",
        [](double psi_l, double v_l, double j_l, double psi_r, double v_r, double j_r, double p0,
           py::object w, double point_psi0, double point_xi, double t_end, double dt, double x_lo,
           double x_hi) {
            Sim1DConfig cfg;
            cfg.left = {psi_l, v_l, j_l};
            cfg.right = {psi_r, v_r, j_r};
            cfg.p0 = p0;
            if (!w.is_none()) cfg.prescribed_w = w.cast<double>();
            cfg.point_psi0 = point_psi0;
            cfg.point_xi = point_xi;
            cfg.t_end = t_end;
            cfg.dt = dt;
            cfg.x_lo = x_lo;
            cfg.x_hi = x_hi;
            const Sim1DResult res = simulate_interface_1d(cfg);
            py::dict d;
            py::list t_list, p_list, psi_p_list, total_list, drift_list;
            for (const auto& r : res.rows) {
                t_list.append(r.t);
                p_list.append(r.p);
                psi_p_list.append(r.psi_p);
                total_list.append(r.total);
                drift_list.append(r.drift);
            }
            d["t"] = t_list;
            d["p"] = p_list;
            d["psi_p"] = psi_p_list;
            d["total"] = total_list;
            d["drift"] = drift_list;
            d["max_abs_drift"] = res.max_abs_drift;
            d["front_speed"] = res.front_speed;
            return d;
        },
        py::arg("psi_left") = 1.0, py::arg("v_left") = 2.0, py::arg("j_left") = 0.0,
        py::arg("psi_right") = 2.0, py::arg("v_right") = 0.5, py::arg("j_right") = 0.0,
        py::arg("p0") = 0.5, py::arg("w") = py::none(), py::arg("point_psi0") = 0.0,
        py::arg("point_xi") = 0.0, py::arg("t_end") = 0.25, py::arg("dt") = 1.0 / 4096.0,
        py::arg("x_lo") = 0.0, py::arg("x_hi") = 1.0);

    m.def(
        "run_config",
        [](const std::string& text) {
            const ConfigMap cfg = ConfigMap::parse_string(text);
            const ScenarioOutput out = run_scenario(cfg, RunOptions{});
            return report_to_dict(out.report);
        },
        py::arg("text"), "run one scenario from config text and return its report");
}
