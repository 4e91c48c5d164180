#include "surfcalc/moving.hpp"

#include <algorithm>
#include <cmath>

#include "surfcalc/surface_ops.hpp"

namespace surfcalc {

namespace {

template <class S>
Vec3T<S> exp_At_times(const Mat3& A, const S& t, const Vec3T<S>& y) {
    // exp(A t) y = sum_n (t^n / n!) A^n y; entries stay O(1) for the catalog
    // flows, 40 terms puts the tail far below double precision.
    Vec3T<S> x = y;
    Vec3T<S> term = y;
    for (int n = 1; n <= 40; ++n) {
        term = A * term;
        const S factor = t * (1.0 / n);
        term = Vec3T<S>{term.x * factor, term.y * factor, term.z * factor};
        x += term;
    }
    return x;
}

}  // namespace

std::shared_ptr<FlowMap> make_linear_flow(const Mat3& A) {
    return make_flow([A](const auto& t, const auto& y1, const auto& y2, const auto& y3) {
        using S = std::decay_t<decltype(t)>;
        return exp_At_times(A, t, Vec3T<S>{y1, y2, y3});
    });
}

std::shared_ptr<FlowMap> make_identity_flow() {
    return make_flow([](const auto& t, const auto& y1, const auto& y2, const auto& y3) {
        using S = std::decay_t<decltype(t)>;
        (void)t;
        return Vec3T<S>{y1, y2, y3};
    });
}

double LevelSetSurface::normal_speed(double t, const Vec3& x) const {
    const Jet2_4 f = f_->jet_at(t, x);
    const Vec3 g{f.grad[1], f.grad[2], f.grad[3]};
    const double mag = norm(g);
    if (mag <= 1e-14) throw VanishingGradient("LevelSetSurface: |grad f| vanishes");
    return -f.grad[0] / mag;
}

Vec3 LevelSetSurface::unit_normal(double t, const Vec3& x) const {
    const Jet2_4 f = f_->jet_at(t, x);
    const Vec3 g{f.grad[1], f.grad[2], f.grad[3]};
    const double mag = norm(g);
    if (mag <= 1e-14) throw VanishingGradient("LevelSetSurface: |grad f| vanishes");
    return g / mag;
}

double GraphSurface::normal_speed(double t, double y1, double y2) const {
    const Jet2_3 s = sigma_->jet_at(t, {y1, y2});
    return s.grad[0] / std::sqrt(s.grad[1] * s.grad[1] + s.grad[2] * s.grad[2] + 1.0);
}

double GraphSurface::speed_residual(double w_nu, double t, double y1, double y2) const {
    const Jet2_3 s = sigma_->jet_at(t, {y1, y2});
    return s.grad[0] - w_nu * std::sqrt(s.grad[1] * s.grad[1] + s.grad[2] * s.grad[2] + 1.0);
}

SurfaceVelocity surface_velocity(const Chart& mc, double t, const Vec2& u) {
    const SurfaceFrame fr = frame_at(mc, t, u);
    return {fr.velocity, fr.normal_speed, fr.velocity_tangential};
}

double thomas_derivative(const AmbientScalarField& psi, const Chart& mc, double t, const Vec2& u) {
    const SurfaceFrame fr = frame_at(mc, t, u);
    const Jet2_4 j = psi.jet_at(t, fr.position);
    const Vec3 grad{j.grad[1], j.grad[2], j.grad[3]};
    return j.grad[0] + dot(grad, fr.normal) * fr.normal_speed;
}

double ring_derivative(const SurfaceScalarField& psi, double t, const Vec2& u) {
    return psi.jet_at(t, u).grad[0];
}

double thomas_derivative(const NormalConstantExtension& psi, const Chart& mc, double t,
                         const Vec2& u) {
    // psi_nu = 0 by construction, so the Thomas derivative is the partial time
    // derivative of the extension: ring derivative minus tangential advection.
    const SurfaceFrame fr = frame_at(mc, t, u);
    const Vec3 grad = surface_gradient(*psi.base, mc, t, u);
    return ring_derivative(*psi.base, t, u) - dot(fr.velocity_tangential, grad);
}

LagrangianDerivative lagrangian_derivative(const AmbientScalarField& psi, const Chart& mc, double t,
                                           const Vec2& u) {
    LagrangianDerivative r;
    // (a) differentiate psi(t, Phi(t,u)) at fixed u through jets
    r.parametric = restrict_to_chart(psi, mc, t, u).grad[0];
    // (b) Thomas derivative plus tangential advection, all ambient-side
    const SurfaceFrame fr = frame_at(mc, t, u);
    const Vec3 sgrad = surface_gradient(psi, fr);
    r.decomposed = thomas_derivative(psi, mc, t, u) + dot(fr.velocity_tangential, sgrad);
    return r;
}

MetricRate metric_rate(const Chart& mc, double t, const Vec2& u) {
    const SurfaceFrame fr = frame_at(mc, t, u);

    // div_Sigma w = g^{ab} (dw/du_a) . tau_b, with dw/du_a the exact mixed jets
    double div_w = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            div_w += fr.metric_inv(a, b) * dot(fr.dvelocity_du[a], fr.tau(b));

    MetricRate r;
    r.value = div_w * fr.area_element;

    const double h = fd_step_default();
    const double sp = frame_at(mc, t + h, u).area_element;
    const double sm = frame_at(mc, t - h, u).area_element;
    r.fd_value = (sp - sm) / (2.0 * h);

    const double scale = std::max({std::abs(r.value), std::abs(r.fd_value), 1e-14});
    if (std::abs(r.value - r.fd_value) / scale > 1e-6 &&
        std::abs(r.value - r.fd_value) > 1e-10)
        throw NumericalError("metric_rate: finite-difference oracle disagrees");
    return r;
}

Vec3 relative_interface_velocity(const FlowMap& fm, const Vec3& w, double t, const Vec3& y) {
    const Mat3 finv = inverse3(fm.deformation_gradient(t, y));
    return finv * (w - fm.velocity(t, y));
}

}  // namespace surfcalc
