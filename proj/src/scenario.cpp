#include "surfcalc/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "surfcalc/quadrature.hpp"
#include "surfcalc/surface_ops.hpp"

namespace surfcalc {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}
}  // namespace

ConfigMap ConfigMap::parse_string(const std::string& text, const std::string& origin) {
    ConfigMap cfg;
    cfg.origin_ = origin;
    cfg.raw_ = text;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigParse("expected 'key = value' in " + origin, line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigParse("empty key in " + origin, line_no);
        if (value.empty()) throw ConfigParse("empty value for key '" + key + "' in " + origin, line_no);
        if (cfg.kv_.count(key)) throw ConfigParse("duplicate key '" + key + "' in " + origin, line_no);
        cfg.kv_[key] = value;
    }
    return cfg;
}

ConfigMap ConfigMap::parse_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw ConfigParse("cannot open config file " + path.string(), 0);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_string(buf.str(), path.string());
}

std::string ConfigMap::get(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigParse("missing required key '" + key + "' in " + origin_, 0);
    return it->second;
}

std::string ConfigMap::get_or(const std::string& key, const std::string& def) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? def : it->second;
}

double ConfigMap::number(const std::string& key) const {
    const std::string v = get(key);
    std::size_t pos = 0;
    double d = 0.0;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigParse("key '" + key + "' is not a number: '" + v + "'", 0);
    }
    if (pos != v.size()) throw ConfigParse("key '" + key + "' is not a number: '" + v + "'", 0);
    if (!std::isfinite(d)) throw ConfigParse("key '" + key + "' must be finite", 0);
    return d;
}

double ConfigMap::number_or(const std::string& key, double def) const {
    return has(key) ? number(key) : def;
}

int ConfigMap::integer_or(const std::string& key, int def) const {
    return has(key) ? static_cast<int>(std::llround(number(key))) : def;
}

// --- catalogs -------------------------------------------------------------------

std::vector<CatalogEntry> chart_catalog() {
    return {
        {"plane", "plane(lx=1, ly=1)"},
        {"disc", "disc(R=1)"},
        {"graph", "graph(a=0.1, kx=3, ky=2)"},
        {"sphere", "sphere(R=1)"},
        {"sphere_cap", "sphere_cap(R=1, theta_max=pi/3)"},
        {"ellipsoid", "ellipsoid(a=1, b=1.3, c=0.8)"},
        {"torus", "torus(R=2, r=0.5)"},
    };
}

std::vector<CatalogEntry> moving_chart_catalog() {
    return {
        {"translate_plane", "translate_plane(c=1)"},
        {"expand_sphere", "expand_sphere(R0=1, c=1)"},
        {"wave_graph", "wave_graph(a=0.1, k=6.283185307179586, omega=1)"},
        {"stretch_plane", "stretch_plane(rate=1)"},
        {"rotate_sphere", "rotate_sphere(omega=1)"},
    };
}

std::vector<CatalogEntry> scalar_field_catalog() {
    return {
        {"constant", "constant(c=1)"},
        {"coord", "coord(i=3)"},
        {"linear", "linear(c0=0, c1=1, c2=0, c3=0)"},
        {"quadratic", "quadratic(c1=1, c2=1, c3=1)"},
        {"sine", "sine(a=1, k=1, i=1)"},
        {"time_linear", "time_linear(c=1)"},
        {"radial2", "radial2()"},
    };
}

std::vector<CatalogEntry> vector_field_catalog() {
    return {
        {"constant3", "constant3(a1=0, a2=0, a3=1)"},
        {"position", "position()"},
        {"swirl", "swirl(omega=1)"},
        {"planar_radial", "planar_radial()"},
        {"sine3", "sine3(a=1, k=1)"},
    };
}

std::vector<CatalogEntry> flow_catalog() {
    return {
        {"identity", "identity()"},
        {"linear", "linear(a1=1, a2=0, a3=0)"},
        {"swirl", "swirl(omega=1)"},
        {"shear", "shear(k=1)"},
    };
}

std::vector<CatalogEntry> scenario_kind_catalog() {
    return {
        {"geometry", "frame invariants, optional closed-form area"},
        {"divergence", "surface divergence theorem on a chart"},
        {"transport", "surface transport theorem on a moving chart"},
        {"reynolds", "volume transport along a flow"},
        {"generalized-reynolds", "volume transport with a singular interface"},
        {"jump", "interface balance residuals in all three forms"},
        {"simulate-1d", "front-tracking with conservation ledger"},
    };
}

std::shared_ptr<Chart> make_catalog_chart(const std::string& name, const ConfigMap& cfg,
                                          const std::string& prefix) {
    auto p = [&](const char* key, double def) { return cfg.number_or(prefix + "." + key, def); };
    if (name == "plane") return make_plane(p("lx", 1.0), p("ly", 1.0));
    if (name == "disc") return make_disc(p("R", 1.0));
    if (name == "graph") return make_graph(p("a", 0.1), p("kx", 3.0), p("ky", 2.0));
    if (name == "sphere") return make_sphere(p("R", 1.0));
    if (name == "sphere_cap") return make_sphere_cap(p("R", 1.0), p("theta_max", kPi / 3.0));
    if (name == "ellipsoid") return make_ellipsoid(p("a", 1.0), p("b", 1.3), p("c", 0.8));
    if (name == "torus") return make_torus(p("R", 2.0), p("r", 0.5));
    if (name == "translate_plane") return make_translate_plane(p("c", 1.0));
    if (name == "expand_sphere") return make_expand_sphere(p("R0", 1.0), p("c", 1.0));
    if (name == "wave_graph") return make_wave_graph(p("a", 0.1), p("k", 2.0 * kPi), p("omega", 1.0));
    if (name == "stretch_plane") return make_stretch_plane(p("rate", 1.0));
    if (name == "rotate_sphere") return make_rotate_sphere(p("omega", 1.0));
    throw UnknownCatalogEntry("unknown chart '" + name + "'");
}

std::shared_ptr<AmbientScalarField> make_catalog_scalar_field(const std::string& name,
                                                              const ConfigMap& cfg,
                                                              const std::string& prefix) {
    auto p = [&](const char* key, double def) { return cfg.number_or(prefix + "." + key, def); };
    if (name == "constant") {
        const double c = p("c", 1.0);
        return scalar_field([c](const auto& t, const auto&, const auto&, const auto&) {
            using S = std::decay_t<decltype(t)>;
            return S(c);
        });
    }
    if (name == "coord") {
        const int i = static_cast<int>(p("i", 3.0));
        if (i < 1 || i > 3) throw ConfigParse("coord field: i must be 1..3", 0);
        return scalar_field([i](const auto& t, const auto& x, const auto& y, const auto& z) {
            (void)t;
            return i == 1 ? x : (i == 2 ? y : z);
        });
    }
    if (name == "linear") {
        const double c0 = p("c0", 0.0), c1 = p("c1", 1.0), c2 = p("c2", 0.0), c3 = p("c3", 0.0);
        return scalar_field([=](const auto& t, const auto& x, const auto& y, const auto& z) {
            (void)t;
            return c0 + c1 * x + c2 * y + c3 * z;
        });
    }
    if (name == "quadratic") {
        const double c1 = p("c1", 1.0), c2 = p("c2", 1.0), c3 = p("c3", 1.0);
        return scalar_field([=](const auto& t, const auto& x, const auto& y, const auto& z) {
            (void)t;
            return c1 * x * x + c2 * y * y + c3 * z * z;
        });
    }
    if (name == "sine") {
        const double a = p("a", 1.0), k = p("k", 1.0);
        const int i = static_cast<int>(p("i", 1.0));
        if (i < 1 || i > 3) throw ConfigParse("sine field: i must be 1..3", 0);
        return scalar_field([=](const auto& t, const auto& x, const auto& y, const auto& z) {
            (void)t;
            return a * sin(k * (i == 1 ? x : (i == 2 ? y : z)));
        });
    }
    if (name == "time_linear") {
        const double c = p("c", 1.0);
        return scalar_field([c](const auto& t, const auto&, const auto&, const auto&) { return c * t; });
    }
    if (name == "radial2") {
        return scalar_field([](const auto& t, const auto& x, const auto& y, const auto& z) {
            (void)t;
            return x * x + y * y + z * z;
        });
    }
    throw UnknownCatalogEntry("unknown scalar field '" + name + "'");
}

std::shared_ptr<AmbientVectorField> make_catalog_vector_field(const std::string& name,
                                                              const ConfigMap& cfg,
                                                              const std::string& prefix) {
    auto p = [&](const char* key, double def) { return cfg.number_or(prefix + "." + key, def); };
    if (name == "constant3") {
        const double a1 = p("a1", 0.0), a2 = p("a2", 0.0), a3 = p("a3", 1.0);
        return vector_field([=](const auto& t, const auto&, const auto&, const auto&) {
            using S = std::decay_t<decltype(t)>;
            return Vec3T<S>{S(a1), S(a2), S(a3)};
        });
    }
    if (name == "position") {
        return vector_field([](const auto& t, const auto& x, const auto& y, const auto& z) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return Vec3T<S>{x, y, z};
        });
    }
    if (name == "swirl") {
        const double om = p("omega", 1.0);
        return vector_field([om](const auto& t, const auto& x, const auto& y, const auto& z) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            (void)z;
            return Vec3T<S>{-om * y, om * x, S(0.0)};
        });
    }
    if (name == "planar_radial") {
        return vector_field([](const auto& t, const auto& x, const auto& y, const auto& z) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            (void)z;
            return Vec3T<S>{x, y, S(0.0)};
        });
    }
    if (name == "sine3") {
        const double a = p("a", 1.0), k = p("k", 1.0);
        return vector_field([=](const auto& t, const auto& x, const auto& y, const auto& z) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return Vec3T<S>{a * sin(k * y), a * sin(k * z), a * sin(k * x)};
        });
    }
    throw UnknownCatalogEntry("unknown vector field '" + name + "'");
}

std::shared_ptr<FlowMap> make_catalog_flow(const std::string& name, const ConfigMap& cfg,
                                           const std::string& prefix) {
    auto p = [&](const char* key, double def) { return cfg.number_or(prefix + "." + key, def); };
    if (name == "identity") return make_identity_flow();
    if (name == "linear")
        return make_linear_flow(Mat3::diag(p("a1", 1.0), p("a2", 0.0), p("a3", 0.0)));
    if (name == "swirl") {
        const double om = p("omega", 1.0);
        Mat3 A;
        A(0, 1) = -om;
        A(1, 0) = om;
        return make_linear_flow(A);
    }
    if (name == "shear") {
        Mat3 A;
        A(0, 1) = p("k", 1.0);
        return make_linear_flow(A);
    }
    throw UnknownCatalogEntry("unknown flow '" + name + "'");
}

namespace {

std::shared_ptr<SurfaceScalarField> constant_graph(double c) {
    return surface_field([c](const auto& t, const auto&, const auto&) {
        using S = std::decay_t<decltype(t)>;
        (void)t;
        return S(c);
    });
}

}  // namespace

PiecewiseVolumeScenario make_catalog_piecewise(const std::string& name, const ConfigMap& cfg) {
    auto p = [&](const char* key, double def) {
        return cfg.number_or(std::string("scenario.") + key, def);
    };

    PiecewiseVolumeScenario sc;
    sc.name = name;
    sc.shadow = {0.0, 1.0, 0.0, 1.0};
    sc.alpha = constant_graph(0.0);
    sc.beta = constant_graph(1.0);

    if (name == "pw_planar_cube") {
        const double psi1 = p("psi1", 1.0), psi2 = p("psi2", 3.0), w = p("w", 0.2);
        sc.sigma = surface_field([w](const auto& t, const auto&, const auto&) { return 0.5 + w * t; });
        sc.psi1 = scalar_field([psi1](const auto& t, const auto&, const auto&, const auto&) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return S(psi1);
        });
        sc.psi2 = scalar_field([psi2](const auto& t, const auto&, const auto&, const auto&) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return S(psi2);
        });
        return sc;
    }
    if (name == "pw_curved") {
        const double w = p("w", 0.2), amp = p("amp", 0.1);
        sc.sigma = surface_field([w, amp](const auto& t, const auto& y1, const auto&) {
            return 0.5 + amp * sin(2.0 * kPi * y1) + w * t;
        });
        sc.psi1 = scalar_field([](const auto& t, const auto& x, const auto&, const auto& z) {
            (void)t;
            return 1.0 + 0.25 * z + 0.1 * sin(2.0 * x);
        });
        sc.psi2 = scalar_field([](const auto& t, const auto&, const auto& y, const auto& z) {
            (void)t;
            return 3.0 + 0.5 * z * z + 0.1 * cos(y);
        });
        return sc;
    }
    if (name == "pw_material") {
        // vertical velocity 4 w z (1 - z) vanishes on the outer walls; the
        // interface rides its material trajectory, the logistic curve
        // sigma(t) = 1 / (1 + exp(-4 w t)), so w = v on sigma exactly.
        const double w = p("w", 0.2);
        sc.sigma = surface_field([w](const auto& t, const auto&, const auto&) {
            return 1.0 / (1.0 + exp(-4.0 * w * t));
        });
        sc.psi1 = scalar_field([](const auto& t, const auto& x, const auto&, const auto& z) {
            (void)t;
            return 1.0 + 0.3 * z + 0.1 * sin(2.0 * x);
        });
        sc.psi2 = scalar_field([](const auto& t, const auto&, const auto& y, const auto& z) {
            (void)t;
            return 2.5 + 0.4 * z * z + 0.1 * cos(y);
        });
        auto v = vector_field([w](const auto& t, const auto&, const auto&, const auto& z) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return Vec3T<S>{S(0.0), S(0.0), 4.0 * w * z * (1.0 - z)};
        });
        sc.v1 = v;
        sc.v2 = v;
        return sc;
    }
    if (name == "pw_continuous") {
        const double w = p("w", 0.3);
        sc.sigma = surface_field([w](const auto& t, const auto& y1, const auto&) {
            return 0.5 + 0.05 * sin(2.0 * kPi * y1) + w * t;
        });
        auto psi = scalar_field([](const auto& t, const auto& x, const auto& y, const auto& z) {
            return 1.0 + 0.2 * sin(x + t) + 0.3 * y * z;
        });
        sc.psi1 = psi;
        sc.psi2 = psi;
        return sc;
    }
    throw UnknownCatalogEntry("unknown piecewise scenario '" + name + "'");
}

InterfaceScenario make_catalog_interface(const std::string& name, const ConfigMap& cfg) {
    auto p = [&](const char* key, double def) {
        return cfg.number_or(std::string("scenario.") + key, def);
    };

    InterfaceScenario sc;
    sc.name = name;

    if (name == "surfactant_sphere") {
        const double R0 = p("R0", 1.0), c = p("c", 0.5), coef = p("coef", 2.0);
        sc.chart = make_expand_sphere(R0, c);
        sc.psi_sigma = surface_field([R0, c, coef](const auto& t, const auto&, const auto&) {
            const auto rad = R0 + c * t;
            return coef / (rad * rad);
        });
        sc.psi_sigma_ext = scalar_field([coef](const auto& t, const auto& x, const auto& y, const auto& z) {
            (void)t;
            return coef / (x * x + y * y + z * z);
        });
        return sc;
    }
    if (name == "classical_rh") {
        const double psi1 = p("psi1", 1.0), v1 = p("v1", 2.0), j1 = p("j1", 0.0);
        const double psi2 = p("psi2", 2.0), v2 = p("v2", 0.5), j2 = p("j2", 0.0);
        const double w_default = ((psi2 * v2 + j2) - (psi1 * v1 + j1)) / (psi2 - psi1);
        const double w = p("w", w_default);
        sc.chart = make_translate_plane(w);
        sc.psi_sigma = constant_graph(0.0);
        sc.psi_sigma_ext = scalar_field([](const auto& t, const auto&, const auto&, const auto&) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return S(0.0);
        });
        auto volume = [](double psi, double v, double j) {
            return std::tuple(scalar_field([psi](const auto& t, const auto&, const auto&, const auto&) {
                                  using S = std::decay_t<decltype(t)>;
                                  (void)t;
                                  return S(psi);
                              }),
                              vector_field([v](const auto& t, const auto&, const auto&, const auto&) {
                                  using S = std::decay_t<decltype(t)>;
                                  (void)t;
                                  return Vec3T<S>{S(0.0), S(0.0), S(v)};
                              }),
                              vector_field([j](const auto& t, const auto&, const auto&, const auto&) {
                                  using S = std::decay_t<decltype(t)>;
                                  (void)t;
                                  return Vec3T<S>{S(0.0), S(0.0), S(j)};
                              }));
        };
        std::tie(sc.psi1, sc.v1, sc.j1) = volume(psi1, v1, j1);
        std::tie(sc.psi2, sc.v2, sc.j2) = volume(psi2, v2, j2);
        return sc;
    }
    if (name == "rich_sphere") {
        const double R0 = p("R0", 1.0), c = p("c", 0.4), om = p("omega", 0.7);
        auto chart_map = [R0, c, om](const auto& t, const auto& th, const auto& ph) {
            using S = std::decay_t<decltype(t)>;
            const auto rad = R0 + c * t;
            const auto lon = ph + om * t;
            return Vec3T<S>{rad * sin(th) * cos(lon), rad * sin(th) * sin(lon), rad * cos(th)};
        };
        sc.chart = make_chart({kPoleMargin, kPi - kPoleMargin, 0.0, 2.0 * kPi}, chart_map, true);
        auto ext = [](const auto& t, const auto& x, const auto& y, const auto& z) {
            return (1.0 + 0.5 * sin(t)) * x * y / (x * x + y * y + z * z);
        };
        sc.psi_sigma_ext = scalar_field(ext);
        sc.psi_sigma = surface_field([chart_map, ext](const auto& t, const auto& u1, const auto& u2) {
            const auto pos = chart_map(t, u1, u2);
            return ext(t, pos.x, pos.y, pos.z);
        });
        sc.j_sigma = surface_vector2([](const auto& t, const auto& u1, const auto& u2) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return Vec2T<S>{0.3 * sin(u2), 0.2 * cos(u1)};
        });
        sc.xi_sigma = surface_field([](const auto& t, const auto& u1, const auto&) {
            return 0.7 * cos(t + u1);
        });
        sc.psi1 = scalar_field([](const auto& t, const auto&, const auto&, const auto& z) {
            (void)t;
            return 1.0 + z * z;
        });
        sc.psi2 = scalar_field([](const auto& t, const auto& x, const auto&, const auto&) {
            (void)t;
            return 2.0 + x;
        });
        sc.v1 = vector_field([](const auto& t, const auto& x, const auto& y, const auto& z) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return Vec3T<S>{0.1 * y, -0.2 * x, 0.3 * z};
        });
        sc.v2 = vector_field([](const auto& t, const auto& x, const auto& y, const auto& z) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return Vec3T<S>{0.2 * x, 0.2 * y, 0.2 * z};
        });
        sc.j1 = vector_field([](const auto& t, const auto&, const auto&, const auto& z) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return Vec3T<S>{0.05 * z, S(0.0), S(0.0)};
        });
        sc.j2 = vector_field([](const auto& t, const auto& x, const auto&, const auto&) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return Vec3T<S>{S(0.0), 0.1 * x, S(0.0)};
        });
        return sc;
    }
    throw UnknownCatalogEntry("unknown jump scenario '" + name + "'");
}

std::string catalog_text() {
    std::ostringstream os;
    auto section = [&](const char* title, const std::vector<CatalogEntry>& entries) {
        os << title << ":\n";
        for (const auto& e : entries) os << "  " << e.signature << "\n";
    };
    section("charts", chart_catalog());
    section("moving charts", moving_chart_catalog());
    section("scalar fields", scalar_field_catalog());
    section("vector fields", vector_field_catalog());
    section("flows", flow_catalog());
    section("scenario kinds", scenario_kind_catalog());
    os << "piecewise scenarios:\n  pw_planar_cube(psi1, psi2, w)\n  pw_curved(w, amp)\n"
          "  pw_material(w)\n  pw_continuous(w)\n";
    os << "jump scenarios:\n  surfactant_sphere(R0, c, coef)\n"
          "  classical_rh(psi1, v1, j1, psi2, v2, j2[, w])\n  rich_sphere(R0, c, omega)\n";
    return os.str();
}

std::string catalog_json() {
    nlohmann::ordered_json j;
    auto fill = [](const std::vector<CatalogEntry>& entries) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            nlohmann::ordered_json o;
            o["name"] = e.name;
            o["signature"] = e.signature;
            arr.push_back(std::move(o));
        }
        return arr;
    };
    j["charts"] = fill(chart_catalog());
    j["moving_charts"] = fill(moving_chart_catalog());
    j["scalar_fields"] = fill(scalar_field_catalog());
    j["vector_fields"] = fill(vector_field_catalog());
    j["flows"] = fill(flow_catalog());
    j["scenario_kinds"] = fill(scenario_kind_catalog());
    j["piecewise_scenarios"] = {"pw_planar_cube", "pw_curved", "pw_material", "pw_continuous"};
    j["jump_scenarios"] = {"surfactant_sphere", "classical_rh", "rich_sphere"};
    return j.dump(2);
}

// --- scenario dispatch ------------------------------------------------------

namespace {

ScenarioOutput run_geometry(const ConfigMap& cfg, const std::string& name, int order, double tol) {
    const auto chart = make_catalog_chart(cfg.get("chart"), cfg);
    const double t = cfg.number_or("t", 0.0);
    const int samples = cfg.integer_or("samples", 100);

    ScenarioOutput out;
    out.report.scenario = name;
    out.report.kind = "geometry";
    out.report.quad_order = order;

    std::mt19937 rng(static_cast<unsigned>(cfg.integer_or("seed", 12345)));
    const Rect2 d = chart->domain();
    std::uniform_real_distribution<double> d1(d.u1_lo + 0.02 * (d.u1_hi - d.u1_lo),
                                              d.u1_hi - 0.02 * (d.u1_hi - d.u1_lo));
    std::uniform_real_distribution<double> d2(d.u2_lo + 0.02 * (d.u2_hi - d.u2_lo),
                                              d.u2_hi - 0.02 * (d.u2_hi - d.u2_lo));

    double max_unit = 0.0, max_orth = 0.0, max_ginv = 0.0, max_area = 0.0, max_sym = 0.0,
           max_weingarten = 0.0;
    double min_spd = 1e300;
    for (int s = 0; s < samples; ++s) {
        const Vec2 u{d1(rng), d2(rng)};
        const SurfaceFrame fr = frame_at(*chart, t, u);
        max_unit = std::max(max_unit, std::abs(norm(fr.normal) - 1.0));
        max_orth = std::max({max_orth, std::abs(dot(fr.normal, fr.tau1)) / norm(fr.tau1),
                             std::abs(dot(fr.normal, fr.tau2)) / norm(fr.tau2)});
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
              double e = 0.0;
              for (int k = 0; k < 2; ++k) e += fr.metric_inv(i, k) * fr.metric(k, j);
              max_ginv = std::max(max_ginv, std::abs(e - (i == j ? 1.0 : 0.0)));
            }
        max_area = std::max(max_area, std::abs(norm(cross(fr.tau1, fr.tau2)) - fr.area_element) /
                                          fr.area_element);
        max_sym = std::max({max_sym, std::abs(fr.curvature(0, 1) - fr.curvature(1, 0)),
                            std::abs(fr.christoffel[0][0][1] - fr.christoffel[0][1][0]),
                            std::abs(fr.christoffel[1][0][1] - fr.christoffel[1][1][0])});
        min_spd = std::min({min_spd, fr.metric(0, 0), fr.det_metric});

        const Vec3T<Jet2_3> nu = normal_jet(*chart, t, u);
        for (int a = 0; a < 2; ++a) {
            const Vec3 wein = normal_derivative_at(fr, a);
            const Vec3 jetd{nu.x.grad[a + 1], nu.y.grad[a + 1], nu.z.grad[a + 1]};
            max_weingarten = std::max(max_weingarten, norm(wein - jetd));
        }
    }

    out.report.add(make_check("normal_unit_length", max_unit, 0.0, 1e-14, true));
    out.report.add(make_check("normal_orthogonality", max_orth, 0.0, 1e-12, true));
    out.report.add(make_check("metric_inverse_identity", max_ginv, 0.0, 1e-12, true));
    out.report.add(make_check("area_element_matches_cross", max_area, 0.0, 1e-12, true));
    out.report.add(make_check("curvature_christoffel_symmetry", max_sym, 0.0, 1e-12, true));
    out.report.add(make_check("weingarten_vs_jet_normal", max_weingarten, 0.0, 1e-8, true));
    {
        CheckResult spd;
        spd.name = "metric_positive_definite";
        spd.lhs = min_spd;
        spd.rhs = 0.0;
        spd.abs_residual = spd.rel_residual = 0.0;
        spd.tolerance = 0.0;
        spd.absolute = true;
        spd.pass = min_spd > 0.0;
        out.report.add(spd);
    }

    if (cfg.has("area.expected")) {
        const double expected = cfg.number("area.expected");
        const double area = surface_area(*chart, t, order);
        out.report.add(make_check("area_vs_closed_form", area, expected, tol));
    }
    return out;
}

ScenarioOutput run_divergence(const ConfigMap& cfg, const std::string& name, int order, double tol) {
    const auto chart = make_catalog_chart(cfg.get("chart"), cfg);
    const auto field = make_catalog_vector_field(cfg.get("field"), cfg);
    const double t = cfg.number_or("t", 0.0);

    ScenarioOutput out;
    out.report = verify_surface_divergence(*chart, *field, t, order, tol);
    out.report.scenario = name;

    for (int lvl = 0, levels = cfg.integer_or("sweep.quad_levels", 0); lvl < levels; ++lvl) {
        const int o = order * (1 << lvl);
        const ResidualReport r = verify_surface_divergence(*chart, *field, t, o, tol);
        for (const auto& c : r.checks)
            out.series.push_back({name, c.name, "quad_order", static_cast<double>(o), c.lhs, c.rhs,
                                  c.abs_residual, c.rel_residual});
    }
    return out;
}

ScenarioOutput run_transport(const ConfigMap& cfg, const std::string& name, int order, double fd,
                             double tol) {
    const auto chart = make_catalog_chart(cfg.get("chart"), cfg);
    const auto field = make_catalog_scalar_field(cfg.get("field"), cfg);
    const double t = cfg.number_or("t", 0.0);
    const double forms_tol = cfg.number_or("forms.tol", 1e-9);

    ScenarioOutput out;
    out.report = verify_surface_transport(*chart, *field, t, order, fd, tol, forms_tol);
    out.report.scenario = name;

    for (int lvl = 0, levels = cfg.integer_or("sweep.levels", 0); lvl < levels; ++lvl) {
        const double h = fd / (1 << lvl);
        const ResidualReport r = verify_surface_transport(*chart, *field, t, order, h, tol, forms_tol);
        for (const auto& c : r.checks)
            out.series.push_back({name, c.name, "fd_step", h, c.lhs, c.rhs, c.abs_residual,
                                  c.rel_residual});
    }
    return out;
}

ScenarioOutput run_reynolds(const ConfigMap& cfg, const std::string& name, int order, double fd,
                            double tol) {
    const auto flow = make_catalog_flow(cfg.get("flow"), cfg);
    const auto field = make_catalog_scalar_field(cfg.get_or("field", "constant"), cfg);
    const double t = cfg.number_or("t", 0.0);
    Box3 box;
    box.lo = {cfg.number_or("box.lo1", 0.0), cfg.number_or("box.lo2", 0.0), cfg.number_or("box.lo3", 0.0)};
    box.hi = {cfg.number_or("box.hi1", 1.0), cfg.number_or("box.hi2", 1.0), cfg.number_or("box.hi3", 1.0)};

    ScenarioOutput out;
    out.report = verify_reynolds(*flow, *field, box, t, order, fd, tol);
    out.report.scenario = name;

    for (int lvl = 0, levels = cfg.integer_or("sweep.levels", 0); lvl < levels; ++lvl) {
        const double h = fd / (1 << lvl);
        const ResidualReport r = verify_reynolds(*flow, *field, box, t, order, h, tol);
        for (const auto& c : r.checks)
            out.series.push_back({name, c.name, "fd_step", h, c.lhs, c.rhs, c.abs_residual,
                                  c.rel_residual});
    }
    return out;
}

ScenarioOutput run_generalized_reynolds(const ConfigMap& cfg, const std::string& name, int order,
                                        double fd, double tol) {
    const PiecewiseVolumeScenario sc = make_catalog_piecewise(cfg.get("scenario"), cfg);
    const double t = cfg.number_or("t", 0.0);
    const bool absolute = cfg.get_or("tol.mode", "relative") == "absolute";
    const double forms_tol = cfg.number_or("forms.tol", absolute ? 1e-12 : 1e-9);

    ScenarioOutput out;
    if (cfg.get_or("material", "false") == "true")
        out.report = verify_material_interface(sc, t, order, fd, tol);
    else
        out.report = verify_generalized_reynolds(sc, t, order, fd, tol, absolute, forms_tol);
    out.report.scenario = name;
    return out;
}

ScenarioOutput run_jump(const ConfigMap& cfg, const std::string& name, double tol) {
    const InterfaceScenario sc = make_catalog_interface(cfg.get("scenario"), cfg);
    const double t = cfg.number_or("t", 0.0);
    const Vec2 u{cfg.number_or("u1", 0.9), cfg.number_or("u2", 1.1)};
    const bool expect_zero = cfg.get_or("expect.zero", "true") == "true";
    const double forms_tol = cfg.number_or("forms.tol", 1e-9);

    const double full = sc.psi_sigma_ext
                            ? interface_jump_residual(sc, t, u, JumpForm::full)
                            : std::numeric_limits<double>::quiet_NaN();
    const double concise = interface_jump_residual(sc, t, u, JumpForm::concise);
    const double coordinate = interface_jump_residual(sc, t, u, JumpForm::coordinate);

    ScenarioOutput out;
    out.report.scenario = name;
    out.report.kind = "jump";
    if (expect_zero) {
        if (!std::isnan(full)) out.report.add(make_check("full_form_residual", full, 0.0, tol, true));
        out.report.add(make_check("concise_form_residual", concise, 0.0, tol, true));
        out.report.add(make_check("coordinate_form_residual", coordinate, 0.0, tol, true));
    }
    if (!std::isnan(full)) {
        out.report.add(make_check("full_vs_concise", full, concise, forms_tol, true));
        out.report.add(make_check("full_vs_coordinate", full, coordinate, forms_tol, true));
    }
    out.report.add(make_check("concise_vs_coordinate", concise, coordinate, forms_tol, true));
    return out;
}

ScenarioOutput run_simulate_1d(const ConfigMap& cfg, const std::string& name, double tol) {
    Sim1DConfig sim;
    sim.left = {cfg.number_or("states.left.psi", 1.0), cfg.number_or("states.left.v", 2.0),
                cfg.number_or("states.left.j", 0.0)};
    sim.right = {cfg.number_or("states.right.psi", 2.0), cfg.number_or("states.right.v", 0.5),
                 cfg.number_or("states.right.j", 0.0)};
    sim.p0 = cfg.number_or("interface.p0", 0.5);
    if (cfg.get_or("interface.w", "rh") != "rh") sim.prescribed_w = cfg.number("interface.w");
    sim.point_psi0 = cfg.number_or("point.psi0", 0.0);
    sim.point_xi = cfg.number_or("point.xi", 0.0);
    sim.t_end = cfg.number_or("t_end", 0.25);
    sim.dt = cfg.number_or("dt", 1.0 / 4096.0);
    sim.x_lo = cfg.number_or("domain.lo", 0.0);
    sim.x_hi = cfg.number_or("domain.hi", 1.0);

    ScenarioOutput out;
    out.sim1d = simulate_interface_1d(sim);
    out.report.scenario = name;
    out.report.kind = "simulate-1d";
    out.report.add(make_check("ledger_drift_per_step", out.sim1d->max_abs_drift, 0.0, tol, true));
    const Sim1DRow& last = out.sim1d->rows.back();
    const double expected_p = sim.p0 + out.sim1d->front_speed * last.t;
    out.report.add(make_check("front_position", last.p, expected_p, 1e-12, true));
    return out;
}

}  // namespace

ScenarioOutput run_scenario(const ConfigMap& cfg, const RunOptions& opt) {
    const std::string kind = cfg.get("kind");
    const std::string name = cfg.get_or("name", kind);
    const int order = opt.quad_order.value_or(cfg.integer_or("quad.order", 16));
    const double fd = opt.fd_step.value_or(cfg.number_or("fd.step", 1e-4));
    const double tol = opt.tol.value_or(cfg.number_or("tol", 1e-8));

    ScenarioOutput out;
    if (kind == "geometry")
        out = run_geometry(cfg, name, order, tol);
    else if (kind == "divergence")
        out = run_divergence(cfg, name, order, tol);
    else if (kind == "transport")
        out = run_transport(cfg, name, order, fd, tol);
    else if (kind == "reynolds")
        out = run_reynolds(cfg, name, order, fd, tol);
    else if (kind == "generalized-reynolds")
        out = run_generalized_reynolds(cfg, name, order, fd, tol);
    else if (kind == "jump")
        out = run_jump(cfg, name, tol);
    else if (kind == "simulate-1d")
        out = run_simulate_1d(cfg, name, opt.tol.value_or(cfg.number_or("tol", 1e-12)));
    else
        throw UnknownCatalogEntry("unknown scenario kind '" + kind + "'");

    out.report.fd_step = kind == "transport" || kind == "reynolds" || kind == "generalized-reynolds"
                             ? fd
                             : out.report.fd_step;
    return out;
}

RunReport run_config_files(const std::vector<std::filesystem::path>& paths, const RunOptions& opt) {
    std::vector<ConfigMap> configs;
    configs.reserve(paths.size());
    for (const auto& p : paths) configs.push_back(ConfigMap::parse_file(p));

    std::vector<ScenarioOutput> outputs(configs.size());
    std::vector<std::exception_ptr> errors(configs.size());

    const int jobs = std::max(1, opt.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= configs.size()) break;
            try {
                outputs[i] = run_scenario(configs[i], opt);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs == 1 || configs.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const std::size_t n_workers = std::min<std::size_t>(jobs, configs.size());
        for (std::size_t j = 0; j < n_workers; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (errors[i]) {
            const std::string ctx = "scenario '" + paths[i].string() + "': ";
            try {
                std::rethrow_exception(errors[i]);
            } catch (const ConfigParse& e) {
                throw ConfigParse(ctx + e.what(), e.line);
            } catch (const UnknownCatalogEntry& e) {
                throw UnknownCatalogEntry(ctx + e.what());
            } catch (const std::exception& e) {
                throw std::runtime_error(ctx + e.what());
            }
        }
    }

    RunReport run;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        run.config_echo.emplace_back(outputs[i].report.scenario, configs[i].raw_text());
        run.scenarios.push_back(outputs[i].report);
    }
    {
        const auto now = std::chrono::system_clock::now();
        const std::time_t tt = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
        run.timestamp = buf;
    }

    if (!opt.out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(opt.out_dir);
        {
            std::ofstream f(fs::path(opt.out_dir) / "report.json");
            f << run.to_json().dump(2) << "\n";
        }
        std::vector<SeriesRow> all_rows;
        for (const auto& o : outputs)
            all_rows.insert(all_rows.end(), o.series.begin(), o.series.end());
        {
            std::ofstream f(fs::path(opt.out_dir) / "series.csv");
            f << series_csv(all_rows);
        }
        for (const auto& o : outputs)
            if (o.sim1d) {
                std::ofstream f(fs::path(opt.out_dir) / ("sim1d_" + o.report.scenario + ".csv"));
                f << o.sim1d->csv();
            }
    }
    return run;
}

}  // namespace surfcalc
