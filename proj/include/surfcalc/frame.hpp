#pragma once

#include <array>

#include "surfcalc/chart.hpp"
#include "surfcalc/errors.hpp"
#include "surfcalc/fields.hpp"
#include "surfcalc/tensor.hpp"

namespace surfcalc {

/// Rank tolerance on |tau1 x tau2|.
inline constexpr double kRankTol = 1e-10;

/// Complete per-point geometric package of a (possibly moving) chart:
/// tangents, unit normal, metric, curvature tensor, mean curvature,
/// Christoffel symbols, plus the point velocity and its parameter
/// derivatives. Everything is evaluated exactly through jets.
struct SurfaceFrame {
    double t = 0.0;
    Vec2 u{};

    Vec3 position{};
    Vec3 tau1{}, tau2{};
    Vec3 normal{};

    Mat2 metric{};       // g_{ab}
    Mat2 metric_inv{};   // g^{ab}
    double det_metric = 0.0;
    double area_element = 0.0;  // sqrt(g) == |tau1 x tau2|

    Mat2 curvature{};            // b_{ab}
    double mean_curvature = 0.0; // (1/2) g^{ab} b_{ab}

    // christoffel[gamma][alpha][beta], symmetric in (alpha, beta)
    std::array<std::array<std::array<double, 2>, 2>, 2> christoffel{};

    Vec3 d2phi[2][2];  // second parameter derivatives of the map

    // Motion data (zero for stationary charts).
    Vec3 velocity{};            // w = dPhi/dt
    Vec3 dvelocity_du[2];       // dw/du_alpha (mixed t-u derivatives)
    double normal_speed = 0.0;  // w . normal
    Vec3 velocity_tangential{};

    const Vec3& tau(int alpha) const { return alpha == 0 ? tau1 : tau2; }
};

/// Evaluates the full frame. Throws DegenerateChart when |tau1 x tau2| <= kRankTol.
SurfaceFrame frame_at(const Chart& chart, double t, const Vec2& u);

/// dnu/du_alpha = -g^{bc} b_{c alpha} tau_b (tangential by construction).
Vec3 normal_derivative_at(const SurfaceFrame& fr, int alpha);

/// First-order (t,u)-jets of the tangents, built from the chart's second
/// derivatives. Only value and gradient entries are meaningful.
std::array<Vec3T<Jet2_3>, 2> tangent_jets(const Chart& chart, double t, const Vec2& u);

/// First-order (t,u)-jets of the unit normal obtained by differentiating
/// (tau1 x tau2)/|tau1 x tau2| through jet arithmetic. Independent of the
/// Weingarten evaluation in normal_derivative_at.
Vec3T<Jet2_3> normal_jet(const Chart& chart, double t, const Vec2& u);

/// Covariant derivative of a contravariant surface vector:
/// (D_gamma a)^alpha = d a^alpha / d u^gamma + Gamma^alpha_{delta gamma} a^delta.
Vec2 covariant_derivative_surface_vector(const Chart& chart, double t, const Vec2& u,
                                         const SurfaceVectorField2& a, int gamma);

/// Covariant derivative of a tangent vector; equals b_{alpha beta} nu and the
/// implementation asserts that identity to 1e-10.
Vec3 covariant_derivative_tangent(const Chart& chart, double t, const Vec2& u, int alpha, int beta);

/// (D_gamma g)_{ab}: vanishes identically (metrinilic property); exposed so the
/// cancellation can be checked numerically.
Mat2 covariant_derivative_metric(const Chart& chart, double t, const Vec2& u, int gamma);

}  // namespace surfcalc
