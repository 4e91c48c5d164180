#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "surfcalc/chart.hpp"
#include "surfcalc/errors.hpp"
#include "surfcalc/fields.hpp"
#include "surfcalc/frame.hpp"
#include "surfcalc/report.hpp"

namespace surfcalc {

// -----------------------------------------------------------------------------
// Jump brackets. Convention, enforced here and nowhere overridable: side 2 is
// the side the interface normal points to, and [[psi]] = psi_2 - psi_1.
// -----------------------------------------------------------------------------

struct JumpState {
    double psi1 = 0.0, psi2 = 0.0;
    Vec3 v1{}, v2{};
    Vec3 j1{}, j2{};
    Vec3 normal{};  // unit, pointing into side 2
    double w_nu = 0.0;
    Vec3 w_tangential{};
};

inline double jump_psi(const JumpState& s) { return s.psi2 - s.psi1; }
inline Vec3 jump_v(const JumpState& s) { return s.v2 - s.v1; }
inline Vec3 jump_flux(const JumpState& s) {
    return (s.psi2 * s.v2 + s.j2) - (s.psi1 * s.v1 + s.j1);
}

/// Right-hand side of the surface balance: [[psi]] w_nu - [[psi v + j]] . nu.
inline double jump_rhs(const JumpState& s) {
    return jump_psi(s) * s.w_nu - dot(jump_flux(s), s.normal);
}

// -----------------------------------------------------------------------------
// Volume balance (away from the interface).
// -----------------------------------------------------------------------------

struct VolumeBalanceSpec {
    std::shared_ptr<AmbientScalarField> psi;
    std::shared_ptr<AmbientVectorField> v;   // null = zero
    std::shared_ptr<AmbientVectorField> j;   // null = zero
    std::shared_ptr<AmbientScalarField> xi;  // null = zero
};

/// d psi/dt + div(psi v + j) - xi at a smooth point.
double volume_balance_residual(const VolumeBalanceSpec& spec, double t, const Vec3& x);

// -----------------------------------------------------------------------------
// Surface balance and interface jump conditions on a moving chart.
// -----------------------------------------------------------------------------

/// Which displayed variant of the surface balance applies: the space-time form
/// needs an ambient extension of the surface density (psi_nu enters); the
/// intrinsic form uses the ring derivative and needs none.
enum class SurfaceDensityKind { ambient_extension, intrinsic };

struct InterfaceScenario {
    std::string name;
    std::shared_ptr<Chart> chart;  // moving interface Sigma(t)

    std::shared_ptr<SurfaceScalarField> psi_sigma;      // intrinsic density on (t, u)
    std::shared_ptr<AmbientScalarField> psi_sigma_ext;  // optional ambient extension
    std::shared_ptr<SurfaceVectorField2> j_sigma;       // tangential flux, contravariant
    std::shared_ptr<SurfaceScalarField> xi_sigma;       // source

    // one-sided volume fields (all optional; null = zero)
    std::shared_ptr<AmbientScalarField> psi1, psi2;
    std::shared_ptr<AmbientVectorField> v1, v2, j1, j2;
};

enum class JumpForm { full, concise, coordinate };

/// One-sided values and geometry assembled at (t, u).
JumpState jump_state_at(const InterfaceScenario& sc, double t, const Vec2& u);

/// LHS - RHS of the surface balance with jumps, in the selected form.
/// form=full differentiates the ambient extension (MissingExtension if none);
/// the concise and coordinate forms use the intrinsic density along distinct
/// code paths, so their agreement is a real check.
double interface_jump_residual(const InterfaceScenario& sc, double t, const Vec2& u, JumpForm form);

/// Uncoupled surface balance (no volume jump terms), in the variant selected
/// by kind.
double surface_balance_residual(const InterfaceScenario& sc, double t, const Vec2& u,
                                SurfaceDensityKind kind);

// -----------------------------------------------------------------------------
// Planar reduction: a moving curve in the x1-x2 plane.
// -----------------------------------------------------------------------------

/// Moving plane curve c(t, q), evaluated on (t, q)-jets.
class PlanarCurve {
public:
    virtual ~PlanarCurve() = default;
    virtual Vec2T<Jet2_2> map(const Jet2_2& t, const Jet2_2& q) const = 0;

    Vec2T<Jet2_2> jet_at(double t, double q) const {
        return map(Jet2_2::variable(t, 0), Jet2_2::variable(q, 1));
    }
};

template <class F>
class AnalyticPlanarCurve final : public PlanarCurve {
public:
    explicit AnalyticPlanarCurve(F f) : f_(std::move(f)) {}
    Vec2T<Jet2_2> map(const Jet2_2& t, const Jet2_2& q) const override { return f_(t, q); }

private:
    F f_;
};

template <class F>
std::shared_ptr<PlanarCurve> make_planar_curve(F f) {
    return std::make_shared<AnalyticPlanarCurve<F>>(std::move(f));
}

/// Geometry of the curve at (t, q). The normal is (c2', -c1')/|c'|, the
/// rotation matching the 3D convention nu = tau1 x tau2 for the cylinder
/// chart over the curve with tau2 = e3; kappa is signed accordingly
/// (an expanding circle with outward normal has kappa = -1/R).
struct CurveFrame {
    Vec2 position{};
    Vec2 tangent_unit{};
    Vec2 normal{};
    double speed = 0.0;      // |c_q|
    double curvature = 0.0;  // 2 x mean curvature of the associated cylinder
    Vec2 velocity{};         // dc/dt
    double w_nu = 0.0, w_tau = 0.0;
};

CurveFrame curve_frame_at(const PlanarCurve& curve, double t, double q);

struct CurveScenario {
    std::string name;
    std::shared_ptr<PlanarCurve> curve;
    // curve quantities as functions of (t, q); Jet2_2 jets
    std::function<Jet2_2(const Jet2_2&, const Jet2_2&)> psi_c;   // curve density
    std::function<Jet2_2(const Jet2_2&, const Jet2_2&)> j_c;     // tangential flux (scalar)
    std::function<Jet2_2(const Jet2_2&, const Jet2_2&)> xi_c;    // source
    double psi_c_nu = 0.0;  // declared normal derivative of the extension (0 = intrinsic)
    // one-sided planar volume states psi(t, x1, x2), v, j in the plane
    std::function<Jet2_3(const Jet2_3&, const Jet2_3&, const Jet2_3&)> psi1, psi2;
    std::function<Vec2T<Jet2_3>(const Jet2_3&, const Jet2_3&, const Jet2_3&)> v1, v2, j1, j2;
};

/// LHS - RHS of the curve balance with jumps at (t, q).
double curve_jump_residual_2d(const CurveScenario& sc, double t, double q);

// -----------------------------------------------------------------------------
// Point reduction in one dimension and the front-tracking simulator.
// -----------------------------------------------------------------------------

struct State1D {
    double psi = 0.0, v = 0.0, j = 0.0;
};

struct InterfacePoint1D {
    double position = 0.0;
    double speed = 0.0;
    double psi_p = 0.0;
    double xi_p = 0.0;
};

/// d psi_p/dt - xi_p - (w [[psi]] - [[psi v + j]]).
double point_jump_residual_1d(const InterfacePoint1D& ip, double dpsi_p_dt, const State1D& left,
                              const State1D& right);

/// Classical reduction w = [[psi v + j]] / [[psi]]; ZeroJump when the
/// denominator is below tol.
double shock_speed_1d(const State1D& left, const State1D& right, double tol = 1e-12);

struct Sim1DConfig {
    State1D left, right;
    double p0 = 0.5;
    std::optional<double> prescribed_w;  // empty = classical shock speed
    double point_psi0 = 0.0;
    double point_xi = 0.0;
    double t_end = 1.0;
    double dt = 1e-3;
    double x_lo = 0.0, x_hi = 1.0;
};

struct Sim1DRow {
    double t = 0.0, p = 0.0, psi_p = 0.0, total = 0.0, drift = 0.0;
};

struct Sim1DResult {
    std::vector<Sim1DRow> rows;
    double max_abs_drift = 0.0;
    double front_speed = 0.0;

    std::string csv() const;  // columns: t,p,psi_p,total,drift
};

/// Exact front tracking of two constant states. The ledger column records the
/// boundary-flux-corrected total, which must stay constant to rounding; drift
/// is its per-step change.
Sim1DResult simulate_interface_1d(const Sim1DConfig& cfg);

}  // namespace surfcalc
