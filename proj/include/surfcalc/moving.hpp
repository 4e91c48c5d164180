#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include "surfcalc/chart.hpp"
#include "surfcalc/errors.hpp"
#include "surfcalc/fields.hpp"
#include "surfcalc/frame.hpp"
#include "surfcalc/tensor.hpp"

namespace surfcalc {

/// Particle motion chi(t, y): reference position y at t = 0, current position
/// chi(t, y). Evaluation on jets yields the particle velocity, the deformation
/// gradient and its time derivative from one pass.
class FlowMap {
public:
    virtual ~FlowMap() = default;

    virtual Vec3T<Jet2_4> eval_j4(const Jet2_4& t, const Jet2_4& y1, const Jet2_4& y2,
                                  const Jet2_4& y3) const = 0;
    virtual Vec3T<Jet2_3> eval_j3(const Jet2_3& t, const Jet2_3& y1, const Jet2_3& y2,
                                  const Jet2_3& y3) const = 0;

    Vec3T<Jet2_4> jet_at(double t, const Vec3& y) const {
        return eval_j4(Jet2_4::variable(t, 0), Jet2_4::variable(y.x, 1), Jet2_4::variable(y.y, 2),
                       Jet2_4::variable(y.z, 3));
    }

    Vec3 position(double t, const Vec3& y) const {
        const auto j = jet_at(t, y);
        return {j.x.val, j.y.val, j.z.val};
    }
    /// Particle velocity as a function of the reference point.
    Vec3 velocity(double t, const Vec3& y) const {
        const auto j = jet_at(t, y);
        return {j.x.grad[0], j.y.grad[0], j.z.grad[0]};
    }
    /// Deformation gradient D_y chi.
    Mat3 deformation_gradient(double t, const Vec3& y) const {
        const auto j = jet_at(t, y);
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) m(i, k) = j[i].grad[k + 1];
        return m;
    }
    /// d/dt of the deformation gradient (mixed t-y derivatives).
    Mat3 deformation_gradient_rate(double t, const Vec3& y) const {
        const auto j = jet_at(t, y);
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) m(i, k) = j[i].h(0, k + 1);
        return m;
    }
    double jacobian_det(double t, const Vec3& y) const {
        return det3(deformation_gradient(t, y));
    }
    /// Spatial divergence of the velocity field at the current position of y:
    /// tr( dF/dt F^{-1} ).
    double spatial_velocity_divergence(double t, const Vec3& y) const {
        const Mat3 rate = deformation_gradient_rate(t, y);
        const Mat3 finv = inverse3(deformation_gradient(t, y));
        const Mat3 grad_v = rate * finv;  // d v_i / d x_j
        return grad_v(0, 0) + grad_v(1, 1) + grad_v(2, 2);
    }
    /// Full spatial velocity gradient d v_i / d x_j at the current position.
    Mat3 spatial_velocity_gradient(double t, const Vec3& y) const {
        return deformation_gradient_rate(t, y) * inverse3(deformation_gradient(t, y));
    }
};

template <class F>
class AnalyticFlowMap final : public FlowMap {
public:
    explicit AnalyticFlowMap(F f) : f_(std::move(f)) {}
    Vec3T<Jet2_4> eval_j4(const Jet2_4& t, const Jet2_4& y1, const Jet2_4& y2,
                          const Jet2_4& y3) const override {
        return f_(t, y1, y2, y3);
    }
    Vec3T<Jet2_3> eval_j3(const Jet2_3& t, const Jet2_3& y1, const Jet2_3& y2,
                          const Jet2_3& y3) const override {
        return f_(t, y1, y2, y3);
    }

private:
    F f_;
};

template <class F>
std::shared_ptr<FlowMap> make_flow(F f) {
    return std::make_shared<AnalyticFlowMap<F>>(std::move(f));
}

/// chi(t, y) = exp(A t) y, evaluated by a truncated series on jets. Covers
/// diagonal stretches, rotations and shears with one exact Jacobian
/// determinant oracle det = exp(tr(A) t).
std::shared_ptr<FlowMap> make_linear_flow(const Mat3& A);
std::shared_ptr<FlowMap> make_identity_flow();

/// Surface given implicitly as {f(t, x) = 0}.
class LevelSetSurface {
public:
    explicit LevelSetSurface(std::shared_ptr<AmbientScalarField> f) : f_(std::move(f)) {}

    const AmbientScalarField& function() const { return *f_; }

    /// Normal speed -f_t / |grad f|. Throws VanishingGradient.
    double normal_speed(double t, const Vec3& x) const;
    Vec3 unit_normal(double t, const Vec3& x) const;

private:
    std::shared_ptr<AmbientScalarField> f_;
};

/// Surface given as a graph x3 = sigma(t, x1, x2) over a shadow domain.
class GraphSurface {
public:
    GraphSurface(std::shared_ptr<SurfaceScalarField> sigma, Rect2 shadow)
        : sigma_(std::move(sigma)), shadow_(shadow) {}

    const SurfaceScalarField& sigma() const { return *sigma_; }
    const Rect2& shadow() const { return shadow_; }

    /// sigma_t - w_nu sqrt(sigma_x1^2 + sigma_x2^2 + 1): zero exactly when
    /// w_nu is the graph's own normal speed.
    double speed_residual(double w_nu, double t, double y1, double y2) const;

    /// The graph's own normal speed sigma_t / sqrt(slopes^2 + 1).
    double normal_speed(double t, double y1, double y2) const;

private:
    std::shared_ptr<SurfaceScalarField> sigma_;
    Rect2 shadow_;
};

struct SurfaceVelocity {
    Vec3 w{};
    double w_nu = 0.0;
    Vec3 w_tangential{};
};

SurfaceVelocity surface_velocity(const Chart& mc, double t, const Vec2& u);

/// Thomas time derivative of an ambient field on the moving surface:
/// d psi/dt + psi_nu w_nu.
double thomas_derivative(const AmbientScalarField& psi, const Chart& mc, double t, const Vec2& u);

/// Thomas derivative of the constant-in-normal extension of a surface field:
/// psi_nu = 0, so it equals the ring derivative minus the tangential advection.
double thomas_derivative(const NormalConstantExtension& psi, const Chart& mc, double t, const Vec2& u);

/// Ring (Lagrangian) derivative of a surface-only field: d/dt psi(t, u) at
/// fixed parameters.
double ring_derivative(const SurfaceScalarField& psi, double t, const Vec2& u);

struct LagrangianDerivative {
    double parametric = 0.0;  // d/dt psi(t, Phi(t,u)) by jets
    double decomposed = 0.0;  // Thomas derivative + w_par . surface gradient
};

/// Both routes to the Lagrangian derivative of an ambient field; they must
/// agree and tests hold them to 1e-8.
LagrangianDerivative lagrangian_derivative(const AmbientScalarField& psi, const Chart& mc, double t,
                                           const Vec2& u);

struct MetricRate {
    double value = 0.0;     // (div_Sigma w) sqrt(g)
    double fd_value = 0.0;  // central difference of sqrt(g) in t
};

/// FD step used by the independent oracles inside verification residuals.
inline double fd_step_default(double time_scale = 1.0) { return 1e-4 * std::max(1.0, time_scale); }

/// Time derivative of the area element. Computes (div_Sigma w) sqrt(g) and
/// asserts agreement with a central difference of sqrt(g) at h = 1e-4
/// (relative error 1e-6 with floor), throwing NumericalError otherwise.
MetricRate metric_rate(const Chart& mc, double t, const Vec2& u);

/// (D_y chi)^{-1} (w - v) at the reference point y: the pull-back of the
/// relative interface velocity; zero exactly when the interface is material.
Vec3 relative_interface_velocity(const FlowMap& fm, const Vec3& w, double t, const Vec3& y);

}  // namespace surfcalc
