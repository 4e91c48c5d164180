#pragma once

#include <utility>

#include "surfcalc/fields.hpp"
#include "surfcalc/frame.hpp"

namespace surfcalc {

// Surface differential operators in both of their equivalent guises: the
// projection form (ambient derivatives projected onto the tangent plane) and
// the parametric form (parameter derivatives contracted with the inverse
// metric). Ambient fields support both; surface fields only the parametric
// one. Keeping the two routes separate is what makes the equivalence testable.

struct Decomposition {
    Vec3 tangential{};
    double normal_component = 0.0;
    Vec2 contravariant{};  // a^alpha = g^{ab} (a . tau_b)
};

Decomposition decompose(const Vec3& a, const SurfaceFrame& fr);

/// Normal and tangential projectors N = nu nu^T, T = I - N.
std::pair<Mat3, Mat3> projector(const SurfaceFrame& fr);

/// Projection form: grad psi - (grad psi . nu) nu, evaluated at fr.position.
Vec3 surface_gradient(const AmbientScalarField& psi, const SurfaceFrame& fr);

/// Parametric form g^{ab} d(psi o Phi)/du_a tau_b for an ambient field.
Vec3 surface_gradient_parametric(const AmbientScalarField& psi, const Chart& chart, double t,
                                 const Vec2& u);

/// Parametric form for a surface-only field.
Vec3 surface_gradient(const SurfaceScalarField& psi, const Chart& chart, double t, const Vec2& u);

/// Projection form of the surface divergence of an ambient vector field.
double surface_divergence(const AmbientVectorField& a, const SurfaceFrame& fr);

/// Parametric form of the surface divergence of an ambient vector field.
double surface_divergence_parametric(const AmbientVectorField& a, const Chart& chart, double t,
                                     const Vec2& u);

struct DivergenceSplit {
    double tangential = 0.0;      // div_Sigma of the tangential part
    double curvature_term = 0.0;  // -2 kappa_M a_nu
};

/// Splits div_Sigma a = div_Sigma a_par - 2 kappa_M a_nu. The tangential part
/// is computed parametrically from the surface-restricted field a - a_nu nu.
DivergenceSplit surface_divergence_split(const AmbientVectorField& a, const Chart& chart, double t,
                                         const Vec2& u);

/// Kelvin-Stokes route: (curl (nu x a)) . nu with nu the unit gradient field
/// of a level-set description. Needs only ambient derivatives, so it is an
/// independent check of the tangential divergence.
double kelvin_stokes_tangential_divergence(const AmbientVectorField& a,
                                           const AmbientScalarField& levelset, double t,
                                           const Vec3& x);

// --- helpers for parametric evaluation through jets ---------------------------

/// (t,u)-jets of a scalar field restricted to the chart (first and second
/// parameter derivatives valid).
Jet2_3 restrict_to_chart(const AmbientScalarField& psi, const Chart& chart, double t, const Vec2& u);

/// (t,u)-jets of a vector field restricted to the chart.
Vec3T<Jet2_3> restrict_to_chart(const AmbientVectorField& a, const Chart& chart, double t,
                                const Vec2& u);

/// Parametric surface divergence of a surface-restricted vector function given
/// as first-order (t,u)-jets: g^{ab} (db/du_a) . tau_b.
double parametric_divergence(const Vec3T<Jet2_3>& b, const SurfaceFrame& fr);

}  // namespace surfcalc
