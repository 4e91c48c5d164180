#include "surfcalc/balance.hpp"

#include <cmath>
#include <sstream>

#include "surfcalc/moving.hpp"
#include "surfcalc/surface_ops.hpp"

namespace surfcalc {

double volume_balance_residual(const VolumeBalanceSpec& spec, double t, const Vec3& x) {
    const Jet2_4 pj = spec.psi->jet_at(t, x);
    double r = pj.grad[0];

    if (spec.v) {
        const auto vj = spec.v->jet_at(t, x);
        // div(psi v) = grad psi . v + psi div v
        for (int i = 0; i < 3; ++i) r += pj.grad[i + 1] * vj[i].val + pj.val * vj[i].grad[i + 1];
    }
    if (spec.j) {
        const auto jj = spec.j->jet_at(t, x);
        for (int i = 0; i < 3; ++i) r += jj[i].grad[i + 1];
    }
    if (spec.xi) r -= spec.xi->value(t, x);
    return r;
}

JumpState jump_state_at(const InterfaceScenario& sc, double t, const Vec2& u) {
    const SurfaceFrame fr = frame_at(*sc.chart, t, u);
    JumpState s;
    s.normal = fr.normal;
    s.w_nu = fr.normal_speed;
    s.w_tangential = fr.velocity_tangential;
    const Vec3 x = fr.position;
    s.psi1 = sc.psi1 ? sc.psi1->value(t, x) : 0.0;
    s.psi2 = sc.psi2 ? sc.psi2->value(t, x) : 0.0;
    s.v1 = sc.v1 ? sc.v1->value(t, x) : Vec3{};
    s.v2 = sc.v2 ? sc.v2->value(t, x) : Vec3{};
    s.j1 = sc.j1 ? sc.j1->value(t, x) : Vec3{};
    s.j2 = sc.j2 ? sc.j2->value(t, x) : Vec3{};
    return s;
}

namespace {

struct SurfaceKinematics {
    SurfaceFrame fr;
    Vec3T<Jet2_3> w_jets;
    Vec3T<Jet2_3> nu_jets;
    Vec3T<Jet2_3> wpar_jets;
    double div_w_frame = 0.0;  // g^{ab} (dw/du_a . tau_b)
};

SurfaceKinematics surface_kinematics(const Chart& chart, double t, const Vec2& u) {
    SurfaceKinematics k{frame_at(chart, t, u), {}, {}, {}, 0.0};
    const Vec3T<Jet2_3> P = chart.jet_at(t, u);
    for (int i = 0; i < 3; ++i) {
        Jet2_3 c;
        c.val = P[i].grad[0];
        for (int m = 0; m < 3; ++m) c.grad[m] = P[i].h(0, m);
        k.w_jets[i] = c;
    }
    k.nu_jets = normal_jet(chart, t, u);
    const Jet2_3 w_nu = dot(k.w_jets, k.nu_jets);
    for (int i = 0; i < 3; ++i) k.wpar_jets[i] = k.w_jets[i] - w_nu * k.nu_jets[i];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            k.div_w_frame += k.fr.metric_inv(a, b) * dot(k.fr.dvelocity_du[a], k.fr.tau(b));
    return k;
}

/// First-order jets of the metric inverse g^{ab}(t, u).
std::array<std::array<Jet2_3, 2>, 2> metric_inv_jets(const Chart& chart, double t, const Vec2& u) {
    const auto taus = tangent_jets(chart, t, u);
    Jet2_3 g00 = dot(taus[0], taus[0]);
    Jet2_3 g01 = dot(taus[0], taus[1]);
    Jet2_3 g11 = dot(taus[1], taus[1]);
    const Jet2_3 det = g00 * g11 - g01 * g01;
    std::array<std::array<Jet2_3, 2>, 2> inv;
    inv[0][0] = g11 / det;
    inv[0][1] = -g01 / det;
    inv[1][0] = -g01 / det;
    inv[1][1] = g00 / det;
    return inv;
}

/// Covariant divergence of contravariant components given as (t,u)-jets:
/// D_a a^a = d a^a / d u^a + Gamma^a_{da} a^d.
double covariant_divergence(const std::array<Jet2_3, 2>& comps, const SurfaceFrame& fr) {
    double s = 0.0;
    for (int a = 0; a < 2; ++a) {
        s += comps[a].grad[a + 1];
        for (int d = 0; d < 2; ++d) s += fr.christoffel[a][d][a] * comps[d].val;
    }
    return s;
}

/// Parametric divergence of the tangential surface flux j^a tau_a.
double surface_flux_divergence(const InterfaceScenario& sc, const SurfaceKinematics& k, double t,
                               const Vec2& u) {
    if (!sc.j_sigma) return 0.0;
    const Vec2T<Jet2_3> comps = sc.j_sigma->jet_at(t, u);
    const auto taus = tangent_jets(*sc.chart, t, u);
    Vec3T<Jet2_3> flux;
    for (int i = 0; i < 3; ++i) flux[i] = comps.x * taus[0][i] + comps.y * taus[1][i];
    return parametric_divergence(flux, k.fr);
}

}  // namespace

double interface_jump_residual(const InterfaceScenario& sc, double t, const Vec2& u, JumpForm form) {
    const SurfaceKinematics k = surface_kinematics(*sc.chart, t, u);
    const SurfaceFrame& fr = k.fr;
    const double rhs = jump_rhs(jump_state_at(sc, t, u));
    const double xi = sc.xi_sigma ? sc.xi_sigma->value(t, u) : 0.0;
    const double kappa = fr.mean_curvature;
    const double w_nu = fr.normal_speed;

    double lhs = 0.0;
    switch (form) {
        case JumpForm::full: {
            if (!sc.psi_sigma_ext)
                throw MissingExtension("interface_jump_residual: full form needs an ambient extension");
            const Jet2_4 pj = sc.psi_sigma_ext->jet_at(t, fr.position);
            const Vec3 grad{pj.grad[1], pj.grad[2], pj.grad[3]};
            const double psi_nu = dot(grad, fr.normal);

            // div(psi w_par) through the chart, entirely on the ambient side
            const Jet2_3 comp = restrict_to_chart(*sc.psi_sigma_ext, *sc.chart, t, u);
            Vec3T<Jet2_3> psi_wpar;
            for (int i = 0; i < 3; ++i) psi_wpar[i] = comp * k.wpar_jets[i];

            lhs = pj.grad[0] + parametric_divergence(psi_wpar, fr) +
                  (psi_nu - 2.0 * kappa * pj.val) * w_nu + surface_flux_divergence(sc, k, t, u) - xi;
            break;
        }
        case JumpForm::concise: {
            const Jet2_3 pj = sc.psi_sigma->jet_at(t, u);
            lhs = pj.grad[0] + pj.val * (k.div_w_frame) + surface_flux_divergence(sc, k, t, u) - xi;
            break;
        }
        case JumpForm::coordinate: {
            const Jet2_3 pj = sc.psi_sigma->jet_at(t, u);
            // contravariant components of the tangential velocity as jets
            const auto taus = tangent_jets(*sc.chart, t, u);
            const auto ginv = metric_inv_jets(*sc.chart, t, u);
            std::array<Jet2_3, 2> w_tau;
            for (int a = 0; a < 2; ++a) {
                Jet2_3 s;
                for (int b = 0; b < 2; ++b) s += ginv[a][b] * dot(k.wpar_jets, taus[b]);
                w_tau[a] = s;
            }
            double div_j = 0.0;
            if (sc.j_sigma) {
                const Vec2T<Jet2_3> jc = sc.j_sigma->jet_at(t, u);
                div_j = covariant_divergence({jc.x, jc.y}, fr);
            }
            lhs = pj.grad[0] + pj.val * (covariant_divergence(w_tau, fr) - 2.0 * kappa * w_nu) +
                  div_j - xi;
            break;
        }
    }
    return lhs - rhs;
}

double surface_balance_residual(const InterfaceScenario& sc, double t, const Vec2& u,
                                SurfaceDensityKind kind) {
    const SurfaceKinematics k = surface_kinematics(*sc.chart, t, u);
    const SurfaceFrame& fr = k.fr;
    const double xi = sc.xi_sigma ? sc.xi_sigma->value(t, u) : 0.0;

    if (kind == SurfaceDensityKind::ambient_extension) {
        if (!sc.psi_sigma_ext)
            throw MissingExtension("surface_balance_residual: ambient variant needs an extension");
        const Jet2_4 pj = sc.psi_sigma_ext->jet_at(t, fr.position);
        const Vec3 grad{pj.grad[1], pj.grad[2], pj.grad[3]};
        const double psi_nu = dot(grad, fr.normal);
        const Jet2_3 comp = restrict_to_chart(*sc.psi_sigma_ext, *sc.chart, t, u);
        Vec3T<Jet2_3> psi_wpar;
        for (int i = 0; i < 3; ++i) psi_wpar[i] = comp * k.wpar_jets[i];
        return pj.grad[0] + parametric_divergence(psi_wpar, fr) +
               (psi_nu - 2.0 * fr.mean_curvature * pj.val) * fr.normal_speed +
               surface_flux_divergence(sc, k, t, u) - xi;
    }

    const Jet2_3 pj = sc.psi_sigma->jet_at(t, u);
    return pj.grad[0] + pj.val * k.div_w_frame + surface_flux_divergence(sc, k, t, u) - xi;
}

// --- planar curve reduction ----------------------------------------------------

CurveFrame curve_frame_at(const PlanarCurve& curve, double t, double q) {
    const Vec2T<Jet2_2> c = curve.jet_at(t, q);
    CurveFrame f;
    f.position = {c.x.val, c.y.val};
    const Vec2 cq{c.x.grad[1], c.y.grad[1]};
    f.speed = norm(cq);
    if (f.speed <= kRankTol) throw DegenerateChart("curve_frame_at: |c_q| below rank tolerance");
    f.tangent_unit = {cq.x / f.speed, cq.y / f.speed};
    f.normal = {cq.y / f.speed, -cq.x / f.speed};
    const Vec2 cqq{c.x.h(1, 1), c.y.h(1, 1)};
    f.curvature = (cqq.x * cq.y - cqq.y * cq.x) / (f.speed * f.speed * f.speed);
    f.velocity = {c.x.grad[0], c.y.grad[0]};
    f.w_nu = f.velocity.x * f.normal.x + f.velocity.y * f.normal.y;
    f.w_tau = f.velocity.x * f.tangent_unit.x + f.velocity.y * f.tangent_unit.y;
    return f;
}

double curve_jump_residual_2d(const CurveScenario& sc, double t, double q) {
    const Vec2T<Jet2_2> c = sc.curve->jet_at(t, q);
    const CurveFrame f = curve_frame_at(*sc.curve, t, q);

    const Jet2_2 jt = Jet2_2::variable(t, 0);
    const Jet2_2 jq = Jet2_2::variable(q, 1);

    const Jet2_2 psi_c = sc.psi_c(jt, jq);
    const double ring = psi_c.grad[0];

    // w and unit tangent as first-order (t, q)-jets
    Vec2T<Jet2_2> w, cq;
    for (int i = 0; i < 2; ++i) {
        Jet2_2 wi, ci;
        wi.val = c[i].grad[0];
        wi.grad[0] = c[i].h(0, 0);
        wi.grad[1] = c[i].h(0, 1);
        ci.val = c[i].grad[1];
        ci.grad[0] = c[i].h(0, 1);
        ci.grad[1] = c[i].h(1, 1);
        w[i] = wi;
        cq[i] = ci;
    }
    const Jet2_2 speed = sqrt(dot(cq, cq));
    Vec2T<Jet2_2> tau{cq.x / speed, cq.y / speed};
    const Jet2_2 w_tau = dot(w, tau);
    const double dwtau_ds = w_tau.grad[1] / f.speed;

    const Jet2_2 j_c = sc.j_c ? sc.j_c(jt, jq) : Jet2_2(0.0);
    const double djc_ds = j_c.grad[1] / f.speed;

    const double xi = sc.xi_c ? sc.xi_c(jt, jq).val : 0.0;

    const double lhs = ring + psi_c.val * (dwtau_ds - f.curvature * f.w_nu) + sc.psi_c_nu * f.w_nu -
                       xi + djc_ds;

    // one-sided planar states at the curve point
    const Jet2_3 ct = Jet2_3::constant(t);
    const Jet2_3 x1 = Jet2_3::constant(f.position.x);
    const Jet2_3 x2 = Jet2_3::constant(f.position.y);
    auto flux = [&](const auto& psi, const auto& v, const auto& j) {
        const double p = psi ? psi(ct, x1, x2).val : 0.0;
        Vec2 total{};
        if (v) {
            const auto vv = v(ct, x1, x2);
            total = {p * vv.x.val, p * vv.y.val};
        }
        if (j) {
            const auto jj = j(ct, x1, x2);
            total = {total.x + jj.x.val, total.y + jj.y.val};
        }
        return total;
    };
    const double p1 = sc.psi1 ? sc.psi1(ct, x1, x2).val : 0.0;
    const double p2 = sc.psi2 ? sc.psi2(ct, x1, x2).val : 0.0;
    const Vec2 f1 = flux(sc.psi1, sc.v1, sc.j1);
    const Vec2 f2 = flux(sc.psi2, sc.v2, sc.j2);
    const double rhs =
        f.w_nu * (p2 - p1) - ((f2.x - f1.x) * f.normal.x + (f2.y - f1.y) * f.normal.y);

    return lhs - rhs;
}

// --- one-dimensional point balance and front tracking --------------------------

double point_jump_residual_1d(const InterfacePoint1D& ip, double dpsi_p_dt, const State1D& left,
                              const State1D& right) {
    const double jump_psi = right.psi - left.psi;
    const double jump_flux = (right.psi * right.v + right.j) - (left.psi * left.v + left.j);
    return dpsi_p_dt - ip.xi_p - (ip.speed * jump_psi - jump_flux);
}

double shock_speed_1d(const State1D& left, const State1D& right, double tol) {
    const double jump_psi = right.psi - left.psi;
    if (std::abs(jump_psi) <= tol) throw ZeroJump("shock_speed_1d: [[psi]] below tolerance");
    const double jump_flux = (right.psi * right.v + right.j) - (left.psi * left.v + left.j);
    return jump_flux / jump_psi;
}

std::string Sim1DResult::csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "t,p,psi_p,total,drift\n";
    for (const auto& r : rows)
        os << r.t << ',' << r.p << ',' << r.psi_p << ',' << r.total << ',' << r.drift << '\n';
    return os.str();
}

Sim1DResult simulate_interface_1d(const Sim1DConfig& cfg) {
    const double jump_psi = cfg.right.psi - cfg.left.psi;
    const double jump_flux =
        (cfg.right.psi * cfg.right.v + cfg.right.j) - (cfg.left.psi * cfg.left.v + cfg.left.j);

    const double w = cfg.prescribed_w ? *cfg.prescribed_w
                                      : shock_speed_1d(cfg.left, cfg.right);

    const double domain = cfg.x_hi - cfg.x_lo;
    const double max_speed =
        std::max({std::abs(cfg.left.v), std::abs(cfg.right.v), std::abs(w)});
    if (max_speed * cfg.dt > domain)
        throw CFLViolation("simulate_interface_1d: dt too large for the domain");

    // point density rate chosen so the point balance holds exactly
    const double psi_p_rate = cfg.point_xi + w * jump_psi - jump_flux;
    // boundary-flux-corrected conservation rate
    const double ledger_rate = cfg.point_xi - jump_flux;

    Sim1DResult out;
    out.front_speed = w;
    const int steps = static_cast<int>(std::llround(cfg.t_end / cfg.dt));

    double psi_p = cfg.point_psi0;
    double prev_ledger = 0.0;
    for (int n = 0; n <= steps; ++n) {
        const double t = n * cfg.dt;
        const double p = cfg.p0 + w * t;
        if (p <= cfg.x_lo || p >= cfg.x_hi)
            throw InterfaceLeavesDomain("simulate_interface_1d: front left the domain");

        const double total = cfg.left.psi * (p - cfg.x_lo) + cfg.right.psi * (cfg.x_hi - p) + psi_p;
        const double ledger = total - t * ledger_rate;

        Sim1DRow row;
        row.t = t;
        row.p = p;
        row.psi_p = psi_p;
        row.total = total;
        row.drift = n == 0 ? 0.0 : ledger - prev_ledger;
        out.max_abs_drift = std::max(out.max_abs_drift, std::abs(row.drift));
        out.rows.push_back(row);

        prev_ledger = ledger;
        psi_p += cfg.dt * psi_p_rate;
    }
    return out;
}

}  // namespace surfcalc
