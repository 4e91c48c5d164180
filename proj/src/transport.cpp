#include "surfcalc/transport.hpp"

#include <cmath>

#include "surfcalc/surface_ops.hpp"

namespace surfcalc {

namespace {

/// First-order (t,u)-jets of the point velocity w = dPhi/dt.
Vec3T<Jet2_3> velocity_jets(const Vec3T<Jet2_3>& P) {
    Vec3T<Jet2_3> w;
    for (int i = 0; i < 3; ++i) {
        Jet2_3 c;
        c.val = P[i].grad[0];
        for (int k = 0; k < 3; ++k) c.grad[k] = P[i].h(0, k);
        w[i] = c;
    }
    return w;
}

Vec3T<Jet2_3> unit_normal_jets(const Chart& chart, double t, const Vec2& u) {
    return normal_jet(chart, t, u);
}

}  // namespace

ResidualReport verify_jacobian_rate(const FlowMap& fm, double t, const Vec3& y, double fd_step,
                                    double tol) {
    ResidualReport rep;
    rep.kind = "jacobian-rate";
    rep.fd_step = fd_step;

    const double lhs =
        (fm.jacobian_det(t + fd_step, y) - fm.jacobian_det(t - fd_step, y)) / (2.0 * fd_step);

    const double det = fm.jacobian_det(t, y);
    const double rhs_div = fm.spatial_velocity_divergence(t, y) * det;

    // raw matrix route: contraction of the co-factors with dA/dt
    const Mat3 A = fm.deformation_gradient(t, y);
    const Mat3 Adot = fm.deformation_gradient_rate(t, y);
    const Mat3 C = cofactor3(A);
    double rhs_cof = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) rhs_cof += C(j, k) * Adot(j, k);

    rep.add(make_check("fd_vs_divergence_rate", lhs, rhs_div, tol));
    rep.add(make_check("fd_vs_cofactor_rate", lhs, rhs_cof, tol));
    rep.add(make_check("divergence_vs_cofactor", rhs_div, rhs_cof, 1e-12));
    return rep;
}

namespace {

/// Integral of psi over the image of the reference box at time s, pulled back.
double volume_integral(const FlowMap& fm, const AmbientScalarField& psi, const Box3& v0, double s,
                       int order) {
    return integrate_box(v0, order, [&](const Vec3& y) {
        const auto j = fm.jet_at(s, y);
        Mat3 F;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) F(i, k) = j[i].grad[k + 1];
        const Vec3 x{j.x.val, j.y.val, j.z.val};
        return psi.value(s, x) * det3(F);
    });
}

/// Boundary flux of psi v over a mapped face of the reference box. dim/side
/// select the face; tangents are ordered so the mapped cross product points
/// outward.
double face_flux(const FlowMap& fm, const AmbientScalarField& psi, const Box3& v0, double t, int dim,
                 bool hi, int order) {
    const int dim_a = hi ? (dim + 1) % 3 : (dim + 2) % 3;
    const int dim_b = hi ? (dim + 2) % 3 : (dim + 1) % 3;
    const double face_coord = hi ? v0.hi[dim] : v0.lo[dim];

    Rect2 rect{v0.lo[dim_a], v0.hi[dim_a], v0.lo[dim_b], v0.hi[dim_b]};
    return integrate_rect(rect, order, [&](double a, double b) {
        Jet2_3 y[3];
        y[dim] = Jet2_3::constant(face_coord);
        y[dim_a] = Jet2_3::variable(a, 1);
        y[dim_b] = Jet2_3::variable(b, 2);
        const auto j = fm.eval_j3(Jet2_3::variable(t, 0), y[0], y[1], y[2]);

        const Vec3 x{j.x.val, j.y.val, j.z.val};
        const Vec3 v{j.x.grad[0], j.y.grad[0], j.z.grad[0]};
        const Vec3 ta{j.x.grad[1], j.y.grad[1], j.z.grad[1]};
        const Vec3 tb{j.x.grad[2], j.y.grad[2], j.z.grad[2]};
        return psi.value(t, x) * dot(v, cross(ta, tb));
    });
}

}  // namespace

ResidualReport verify_reynolds(const FlowMap& fm, const AmbientScalarField& psi, const Box3& v0,
                               double t, int quad_order, double fd_step, double tol) {
    ResidualReport rep;
    rep.kind = "reynolds";
    rep.quad_order = quad_order;
    rep.fd_step = fd_step;

    const double lhs = (volume_integral(fm, psi, v0, t + fd_step, quad_order) -
                        volume_integral(fm, psi, v0, t - fd_step, quad_order)) /
                       (2.0 * fd_step);

    // divergence form: int [psi_t + grad psi . v + psi div v] J dV0
    const double rhs_div = integrate_box(v0, quad_order, [&](const Vec3& y) {
        const auto j = fm.jet_at(t, y);
        Mat3 F, Fdot;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                F(i, k) = j[i].grad[k + 1];
                Fdot(i, k) = j[i].h(0, k + 1);
            }
        const Vec3 x{j.x.val, j.y.val, j.z.val};
        const Vec3 v{j.x.grad[0], j.y.grad[0], j.z.grad[0]};
        const Mat3 grad_v = Fdot * inverse3(F);
        const double div_v = grad_v(0, 0) + grad_v(1, 1) + grad_v(2, 2);

        const Jet2_4 pj = psi.jet_at(t, x);
        const Vec3 grad_psi{pj.grad[1], pj.grad[2], pj.grad[3]};
        return (pj.grad[0] + dot(grad_psi, v) + pj.val * div_v) * det3(F);
    });

    // boundary-flux form: int psi_t J dV0 + sum of mapped face fluxes
    double rhs_flux = integrate_box(v0, quad_order, [&](const Vec3& y) {
        const auto j = fm.jet_at(t, y);
        Mat3 F;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) F(i, k) = j[i].grad[k + 1];
        const Vec3 x{j.x.val, j.y.val, j.z.val};
        return psi.time_derivative(t, x) * det3(F);
    });
    for (int dim = 0; dim < 3; ++dim)
        for (int hi = 0; hi < 2; ++hi)
            rhs_flux += face_flux(fm, psi, v0, t, dim, hi == 1, quad_order);

    rep.add(make_check("fd_vs_divergence_form", lhs, rhs_div, tol));
    rep.add(make_check("fd_vs_boundary_flux_form", lhs, rhs_flux, tol));
    rep.add(make_check("divergence_vs_boundary_flux", rhs_div, rhs_flux, 1e-9));
    return rep;
}

ResidualReport verify_surface_divergence(const Chart& chart, const AmbientVectorField& a, double t,
                                         int quad_order, double tol) {
    ResidualReport rep;
    rep.kind = "surface-divergence";
    rep.quad_order = quad_order;

    const double surface_tangential = integrate_rect(chart.domain(), quad_order, [&](double u1, double u2) {
        const Vec2 u{u1, u2};
        const SurfaceFrame fr = frame_at(chart, t, u);
        return surface_divergence_split(a, chart, t, u).tangential * fr.area_element;
    });

    const BoundaryIntegral line = integrate_boundary(chart, a, t, quad_order);
    if (line.flipped) rep.notes.push_back("boundary orientation flipped to satisfy right-hand rule");

    // curvature-corrected form: int div_Sigma a dS = line - int 2 kappa a_nu dS
    const double surface_full = integrate_rect(chart.domain(), quad_order, [&](double u1, double u2) {
        const Vec2 u{u1, u2};
        const SurfaceFrame fr = frame_at(chart, t, u);
        return surface_divergence(a, fr) * fr.area_element;
    });
    const double curvature_integral = integrate_rect(chart.domain(), quad_order, [&](double u1, double u2) {
        const Vec2 u{u1, u2};
        const SurfaceFrame fr = frame_at(chart, t, u);
        const double a_nu = dot(a.value(t, fr.position), fr.normal);
        return 2.0 * fr.mean_curvature * a_nu * fr.area_element;
    });

    rep.add(make_check("tangential_divergence_vs_line_integral", surface_tangential, line.value, tol));
    rep.add(make_check("full_divergence_vs_curvature_corrected", surface_full,
                       line.value - curvature_integral, tol));
    return rep;
}

namespace {

struct TransportIntegrands {
    double lagrangian_divergence = 0.0;       // ring + psi div w
    double lagrangian_curvature_split = 0.0;  // ring + psi (div w_par - 2 kappa w_nu)
    double thomas_flux = 0.0;                 // thomas + div(psi w_par) - 2 kappa psi w_nu
    double spacetime_full_velocity = 0.0;     // psi_t + div(psi w) + psi_nu w_nu
    double spacetime_curvature_split = 0.0;   // psi_t + div(psi w_par) + (psi_nu - 2 kappa psi) w_nu
    bool has_spacetime_forms = false;
};

struct NodeKinematics {
    SurfaceFrame fr;
    Vec3T<Jet2_3> w_jets, wpar_jets;
    double div_w_frame = 0.0;
    double div_wpar = 0.0;
};

NodeKinematics node_kinematics(const Chart& mc, double t, const Vec2& u) {
    NodeKinematics nk{frame_at(mc, t, u), {}, {}, 0.0, 0.0};
    const Vec3T<Jet2_3> P = mc.jet_at(t, u);
    nk.w_jets = velocity_jets(P);
    const Vec3T<Jet2_3> nu = unit_normal_jets(mc, t, u);
    const Jet2_3 w_nu = dot(nk.w_jets, nu);
    for (int i = 0; i < 3; ++i) nk.wpar_jets[i] = nk.w_jets[i] - w_nu * nu[i];

    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            nk.div_w_frame += nk.fr.metric_inv(a, b) * dot(nk.fr.dvelocity_du[a], nk.fr.tau(b));
    nk.div_wpar = parametric_divergence(nk.wpar_jets, nk.fr);
    return nk;
}

TransportIntegrands transport_integrands(const Chart& mc, const AmbientScalarField& psi, double t,
                                         const Vec2& u) {
    const NodeKinematics nk = node_kinematics(mc, t, u);
    const SurfaceFrame& fr = nk.fr;

    const Jet2_3 comp = restrict_to_chart(psi, mc, t, u);
    const double ring = comp.grad[0];

    const Jet2_4 pj = psi.jet_at(t, fr.position);
    const double psi_val = pj.val;
    const double psi_t = pj.grad[0];
    const Vec3 grad_psi{pj.grad[1], pj.grad[2], pj.grad[3]};
    const double psi_nu = dot(grad_psi, fr.normal);
    const double thomas = psi_t + psi_nu * fr.normal_speed;

    Vec3T<Jet2_3> psi_w, psi_wpar;
    for (int i = 0; i < 3; ++i) {
        psi_w[i] = comp * nk.w_jets[i];
        psi_wpar[i] = comp * nk.wpar_jets[i];
    }
    const double div_psi_w = parametric_divergence(psi_w, fr);
    const double div_psi_wpar = parametric_divergence(psi_wpar, fr);

    const double kappa = fr.mean_curvature;
    const double w_nu = fr.normal_speed;

    TransportIntegrands out;
    out.lagrangian_divergence = ring + psi_val * nk.div_w_frame;
    out.lagrangian_curvature_split = ring + psi_val * (nk.div_wpar - 2.0 * kappa * w_nu);
    out.thomas_flux = thomas + div_psi_wpar - 2.0 * kappa * psi_val * w_nu;
    out.spacetime_full_velocity = psi_t + div_psi_w + psi_nu * w_nu;
    out.spacetime_curvature_split = psi_t + div_psi_wpar + (psi_nu - 2.0 * kappa * psi_val) * w_nu;
    out.has_spacetime_forms = true;
    return out;
}

TransportIntegrands transport_integrands(const Chart& mc, const SurfaceScalarField& psi,
                                         bool constant_normal_extension, double t, const Vec2& u) {
    const NodeKinematics nk = node_kinematics(mc, t, u);
    const SurfaceFrame& fr = nk.fr;

    const Jet2_3 comp = psi.jet_at(t, u);
    const double ring = comp.grad[0];
    const double psi_val = comp.val;

    const Vec3 sgrad = surface_gradient(psi, mc, t, u);
    const double thomas = ring - dot(fr.velocity_tangential, sgrad);

    Vec3T<Jet2_3> psi_w, psi_wpar;
    for (int i = 0; i < 3; ++i) {
        psi_w[i] = comp * nk.w_jets[i];
        psi_wpar[i] = comp * nk.wpar_jets[i];
    }
    const double div_psi_w = parametric_divergence(psi_w, fr);
    const double div_psi_wpar = parametric_divergence(psi_wpar, fr);

    const double kappa = fr.mean_curvature;
    const double w_nu = fr.normal_speed;

    TransportIntegrands out;
    out.lagrangian_divergence = ring + psi_val * nk.div_w_frame;
    out.lagrangian_curvature_split = ring + psi_val * (nk.div_wpar - 2.0 * kappa * w_nu);
    out.thomas_flux = thomas + div_psi_wpar - 2.0 * kappa * psi_val * w_nu;
    if (constant_normal_extension) {
        // psi_nu = 0 and the extension's partial time derivative is the
        // Thomas derivative
        out.spacetime_full_velocity = thomas + div_psi_w;
        out.spacetime_curvature_split = thomas + div_psi_wpar - 2.0 * kappa * psi_val * w_nu;
        out.has_spacetime_forms = true;
    }
    return out;
}

template <class Integrands, class AreaIntegral>
ResidualReport transport_report(const Chart& mc, double t, int quad_order, double fd_step, double tol,
                                double forms_tol, Integrands&& integrands,
                                AreaIntegral&& weighted_integral) {
    ResidualReport rep;
    rep.kind = "surface-transport";
    rep.quad_order = quad_order;
    rep.fd_step = fd_step;

    const double lhs = (weighted_integral(t + fd_step) - weighted_integral(t - fd_step)) / (2.0 * fd_step);

    // all five form integrands accumulated in one pass over the nodes
    const GaussLegendre& gl = GaussLegendre::get(quad_order);
    const Rect2 dom = mc.domain();
    TransportIntegrands sums{};
    bool has_spacetime = true;
    for (std::size_t i = 0; i < gl.nodes().size(); ++i) {
        const double u1 = 0.5 * (dom.u1_lo + dom.u1_hi) + 0.5 * (dom.u1_hi - dom.u1_lo) * gl.nodes()[i];
        for (std::size_t j = 0; j < gl.nodes().size(); ++j) {
            const double u2 =
                0.5 * (dom.u2_lo + dom.u2_hi) + 0.5 * (dom.u2_hi - dom.u2_lo) * gl.nodes()[j];
            const Vec2 u{u1, u2};
            const double wgt = gl.weights()[i] * gl.weights()[j] * frame_at(mc, t, u).area_element;
            const TransportIntegrands ti = integrands(t, u);
            has_spacetime = ti.has_spacetime_forms;
            sums.lagrangian_divergence += wgt * ti.lagrangian_divergence;
            sums.lagrangian_curvature_split += wgt * ti.lagrangian_curvature_split;
            sums.thomas_flux += wgt * ti.thomas_flux;
            sums.spacetime_full_velocity += wgt * ti.spacetime_full_velocity;
            sums.spacetime_curvature_split += wgt * ti.spacetime_curvature_split;
        }
    }
    const double scale = 0.25 * (dom.u1_hi - dom.u1_lo) * (dom.u2_hi - dom.u2_lo);
    std::vector<std::pair<std::string, double>> forms = {
        {"lagrangian_divergence", scale * sums.lagrangian_divergence},
        {"lagrangian_curvature_split", scale * sums.lagrangian_curvature_split},
        {"thomas_flux", scale * sums.thomas_flux},
    };
    if (has_spacetime) {
        forms.emplace_back("spacetime_full_velocity", scale * sums.spacetime_full_velocity);
        forms.emplace_back("spacetime_curvature_split", scale * sums.spacetime_curvature_split);
    }

    for (const auto& [name, value] : forms) rep.add(make_check("fd_vs_" + name, lhs, value, tol));

    double fmin = forms.front().second, fmax = forms.front().second;
    for (const auto& [name, value] : forms) {
        fmin = std::min(fmin, value);
        fmax = std::max(fmax, value);
    }
    rep.add(make_check("forms_mutual_agreement", fmax, fmin, forms_tol));
    return rep;
}

}  // namespace

ResidualReport verify_surface_transport(const Chart& mc, const AmbientScalarField& psi, double t,
                                        int quad_order, double fd_step, double tol, double forms_tol) {
    auto integrands = [&](double s, const Vec2& u) { return transport_integrands(mc, psi, s, u); };
    auto weighted = [&](double s) { return integrate_surface(mc, psi, s, quad_order); };
    ResidualReport rep =
        transport_report(mc, t, quad_order, fd_step, tol, forms_tol, integrands, weighted);
    rep.scenario = "surface-transport(ambient)";
    return rep;
}

ResidualReport verify_surface_transport(const Chart& mc, const SurfaceScalarField& psi,
                                        bool constant_normal_extension, double t, int quad_order,
                                        double fd_step, double tol, double forms_tol) {
    auto integrands = [&](double s, const Vec2& u) {
        return transport_integrands(mc, psi, constant_normal_extension, s, u);
    };
    auto weighted = [&](double s) { return integrate_surface(mc, psi, s, quad_order); };
    ResidualReport rep =
        transport_report(mc, t, quad_order, fd_step, tol, forms_tol, integrands, weighted);
    rep.scenario = "surface-transport(surface)";
    return rep;
}

// --- generalized volume transport with an interface ---------------------------

namespace {

struct SideIntegrand {
    const AmbientScalarField* psi;
    const AmbientVectorField* v;  // may be null
};

/// int_D [ int_alpha^sigma f(side 1) + int_sigma^beta f(side 2) ] dA
template <class F>
double split_volume(const PiecewiseVolumeScenario& sc, double s, int order, F&& f) {
    const GaussLegendre& gl = GaussLegendre::get(order);
    return integrate_rect(sc.shadow, order, [&](double y1, double y2) {
        const double a = sc.alpha->value(s, {y1, y2});
        const double b = sc.beta->value(s, {y1, y2});
        const double sg = sc.sigma->value(s, {y1, y2});
        if (!(a < sg && sg < b))
            throw InterfaceEscapesVolume("interface left the control volume during the FD stencil");
        const double below = gl.integrate(a, sg, [&](double y3) { return f(1, s, Vec3{y1, y2, y3}); });
        const double above = gl.integrate(sg, b, [&](double y3) { return f(2, s, Vec3{y1, y2, y3}); });
        return below + above;
    });
}

double transport_density(const SideIntegrand& side, double s, const Vec3& x) {
    const Jet2_4 pj = side.psi->jet_at(s, x);
    if (!side.v) return pj.grad[0];
    const auto vj = side.v->jet_at(s, x);
    const Vec3 vv{vj.x.val, vj.y.val, vj.z.val};
    const Vec3 grad_psi{pj.grad[1], pj.grad[2], pj.grad[3]};
    const double div_v = vj.x.grad[1] + vj.y.grad[2] + vj.z.grad[3];
    return pj.grad[0] + dot(grad_psi, vv) + pj.val * div_v;
}

/// Flux of psi v through the four side walls of the shadow box, split at the
/// interface; zero when no velocity fields are present.
double side_wall_flux(const PiecewiseVolumeScenario& sc, double t, int order) {
    if (!sc.v1 && !sc.v2) return 0.0;
    const GaussLegendre& gl = GaussLegendre::get(order);

    auto wall = [&](int dim, bool hi) {
        const double c = hi ? (dim == 0 ? sc.shadow.u1_hi : sc.shadow.u2_hi)
                            : (dim == 0 ? sc.shadow.u1_lo : sc.shadow.u2_lo);
        const double lo = dim == 0 ? sc.shadow.u2_lo : sc.shadow.u1_lo;
        const double hi_other = dim == 0 ? sc.shadow.u2_hi : sc.shadow.u1_hi;
        const Vec3 n = dim == 0 ? Vec3{hi ? 1.0 : -1.0, 0.0, 0.0} : Vec3{0.0, hi ? 1.0 : -1.0, 0.0};

        return gl.integrate(lo, hi_other, [&](double other) {
            const double y1 = dim == 0 ? c : other;
            const double y2 = dim == 0 ? other : c;
            const double a = sc.alpha->value(t, {y1, y2});
            const double b = sc.beta->value(t, {y1, y2});
            const double sg = sc.sigma->value(t, {y1, y2});
            if (b - a <= 0.0) return 0.0;
            auto flux = [&](const SideIntegrand& side, double z) {
                if (!side.v) return 0.0;
                const Vec3 x{y1, y2, z};
                return side.psi->value(t, x) * dot(side.v->value(t, x), n);
            };
            const SideIntegrand s1{sc.psi1.get(), sc.v1.get()};
            const SideIntegrand s2{sc.psi2.get(), sc.v2.get()};
            double total = 0.0;
            if (sg > a) total += gl.integrate(a, std::min(sg, b), [&](double z) { return flux(s1, z); });
            if (sg < b) total += gl.integrate(std::max(sg, a), b, [&](double z) { return flux(s2, z); });
            return total;
        });
    };

    double total = 0.0;
    for (int dim = 0; dim < 2; ++dim)
        for (int hi = 0; hi < 2; ++hi) total += wall(dim, hi == 1);
    return total;
}

/// Flux of psi v through the top (beta) and bottom (alpha) graph surfaces.
double cap_flux(const PiecewiseVolumeScenario& sc, double t, int order) {
    if (!sc.v1 && !sc.v2) return 0.0;
    return integrate_rect(sc.shadow, order, [&](double y1, double y2) {
        double total = 0.0;
        if (sc.v2) {
            const Jet2_3 bj = sc.beta->jet_at(t, {y1, y2});
            const Vec3 m_out{-bj.grad[1], -bj.grad[2], 1.0};  // outward area vector
            const Vec3 x{y1, y2, bj.val};
            total += sc.psi2->value(t, x) * dot(sc.v2->value(t, x), m_out);
        }
        if (sc.v1) {
            const Jet2_3 aj = sc.alpha->jet_at(t, {y1, y2});
            const Vec3 m_out{aj.grad[1], aj.grad[2], -1.0};
            const Vec3 x{y1, y2, aj.val};
            total += sc.psi1->value(t, x) * dot(sc.v1->value(t, x), m_out);
        }
        return total;
    });
}

/// int_Sigma [[psi (w - v)]] . nu dS written over the shadow domain.
double interface_jump_flux(const PiecewiseVolumeScenario& sc, double t, int order) {
    return integrate_rect(sc.shadow, order, [&](double y1, double y2) {
        const Jet2_3 sj = sc.sigma->jet_at(t, {y1, y2});
        const Vec3 m{-sj.grad[1], -sj.grad[2], 1.0};  // nu dS = m dA
        const double w_dot_m = sj.grad[0];            // (0,0,sigma_t) . m
        const Vec3 x{y1, y2, sj.val};

        auto side_term = [&](const AmbientScalarField& psi, const AmbientVectorField* v) {
            const double vm = v ? dot(v->value(t, x), m) : 0.0;
            return psi.value(t, x) * (w_dot_m - vm);
        };
        return side_term(*sc.psi2, sc.v2.get()) - side_term(*sc.psi1, sc.v1.get());
    });
}

double interface_density_jump_flux(const PiecewiseVolumeScenario& sc, double t, int order) {
    return integrate_rect(sc.shadow, order, [&](double y1, double y2) {
        const Jet2_3 sj = sc.sigma->jet_at(t, {y1, y2});
        const Vec3 x{y1, y2, sj.val};
        return (sc.psi2->value(t, x) - sc.psi1->value(t, x)) * sj.grad[0];
    });
}

}  // namespace

ResidualReport verify_generalized_reynolds(const PiecewiseVolumeScenario& sc, double t,
                                           int quad_order, double fd_step, double tol,
                                           bool absolute_tol, double forms_tol) {
    ResidualReport rep;
    rep.scenario = sc.name;
    rep.kind = "generalized-reynolds";
    rep.quad_order = quad_order;
    rep.fd_step = fd_step;

    auto total = [&](double s) {
        return split_volume(sc, s, quad_order, [&](int side, double ss, const Vec3& x) {
            return side == 1 ? sc.psi1->value(ss, x) : sc.psi2->value(ss, x);
        });
    };
    const double lhs = (total(t + fd_step) - total(t - fd_step)) / (2.0 * fd_step);

    const SideIntegrand s1{sc.psi1.get(), sc.v1.get()};
    const SideIntegrand s2{sc.psi2.get(), sc.v2.get()};

    const double volume_transport = split_volume(sc, t, quad_order, [&](int side, double ss, const Vec3& x) {
        return transport_density(side == 1 ? s1 : s2, ss, x);
    });
    const double rhs_jump = volume_transport - interface_jump_flux(sc, t, quad_order);

    const double volume_time = split_volume(sc, t, quad_order, [&](int side, double ss, const Vec3& x) {
        return (side == 1 ? sc.psi1 : sc.psi2)->time_derivative(ss, x);
    });
    const double rhs_flux = volume_time + cap_flux(sc, t, quad_order) + side_wall_flux(sc, t, quad_order) -
                            interface_density_jump_flux(sc, t, quad_order);

    rep.add(make_check("fd_vs_jump_form", lhs, rhs_jump, tol, absolute_tol));
    rep.add(make_check("fd_vs_boundary_flux_form", lhs, rhs_flux, tol, absolute_tol));
    rep.add(make_check("forms_mutual_agreement", rhs_jump, rhs_flux, forms_tol,
                       absolute_tol));
    return rep;
}

ResidualReport verify_material_interface(const PiecewiseVolumeScenario& sc, double t, int quad_order,
                                         double fd_step, double tol, double degeneracy_tol) {
    ResidualReport rep = verify_generalized_reynolds(sc, t, quad_order, fd_step, tol);
    rep.kind = "material-interface";

    const double jump = interface_jump_flux(sc, t, quad_order);
    rep.add(make_check("jump_integral_vanishes", jump, 0.0, degeneracy_tol, /*absolute=*/true));

    // one-sided volume-transport reports: each piece is a material volume
    const GaussLegendre& gl = GaussLegendre::get(quad_order);
    auto piece_total = [&](int side, double s) {
        return integrate_rect(sc.shadow, quad_order, [&](double y1, double y2) {
            const double a = sc.alpha->value(s, {y1, y2});
            const double b = sc.beta->value(s, {y1, y2});
            const double sg = sc.sigma->value(s, {y1, y2});
            const double zlo = side == 1 ? a : sg;
            const double zhi = side == 1 ? sg : b;
            const auto& psi = side == 1 ? sc.psi1 : sc.psi2;
            return gl.integrate(zlo, zhi, [&](double z) { return psi->value(s, {y1, y2, z}); });
        });
    };
    const SideIntegrand sides[2] = {{sc.psi1.get(), sc.v1.get()}, {sc.psi2.get(), sc.v2.get()}};
    double rhs_sum = 0.0;
    for (int side = 1; side <= 2; ++side) {
        const double piece_lhs =
            (piece_total(side, t + fd_step) - piece_total(side, t - fd_step)) / (2.0 * fd_step);
        const double piece_rhs = integrate_rect(sc.shadow, quad_order, [&](double y1, double y2) {
            const double a = sc.alpha->value(t, {y1, y2});
            const double b = sc.beta->value(t, {y1, y2});
            const double sg = sc.sigma->value(t, {y1, y2});
            const double zlo = side == 1 ? a : sg;
            const double zhi = side == 1 ? sg : b;
            return gl.integrate(zlo, zhi, [&](double z) {
                return transport_density(sides[side - 1], t, Vec3{y1, y2, z});
            });
        });
        rhs_sum += piece_rhs;
        rep.add(make_check("piece" + std::to_string(side) + "_transport", piece_lhs, piece_rhs, tol));
    }

    // the generalized report must reduce to the sum of the one-sided reports
    const double rhs_jump_form = rep.checks.at(0).rhs;
    rep.add(make_check("reduces_to_two_piece_transport", rhs_jump_form, rhs_sum - jump, degeneracy_tol,
                       /*absolute=*/true));
    return rep;
}

std::vector<PillboxSample> pillbox_sweep(const PiecewiseVolumeScenario& sc, double t,
                                         const std::vector<double>& epsilons, int quad_order) {
    std::vector<PillboxSample> out;
    const GaussLegendre& gl = GaussLegendre::get(quad_order);
    const double interface_term = interface_jump_flux(sc, t, quad_order);
    const SideIntegrand s1{sc.psi1.get(), sc.v1.get()};
    const SideIntegrand s2{sc.psi2.get(), sc.v2.get()};

    for (const double eps : epsilons) {
        PillboxSample sample;
        sample.epsilon = eps;
        sample.interface_term = interface_term;
        sample.volume_term = integrate_rect(sc.shadow, quad_order, [&](double y1, double y2) {
            const double sg = sc.sigma->value(t, {y1, y2});
            const double below =
                gl.integrate(sg - eps, sg, [&](double z) { return transport_density(s1, t, {y1, y2, z}); });
            const double above =
                gl.integrate(sg, sg + eps, [&](double z) { return transport_density(s2, t, {y1, y2, z}); });
            return below + above;
        });
        out.push_back(sample);
    }
    return out;
}

}  // namespace surfcalc
