#pragma once

#include <memory>
#include <string>
#include <vector>

#include "surfcalc/chart.hpp"
#include "surfcalc/fields.hpp"
#include "surfcalc/moving.hpp"
#include "surfcalc/quadrature.hpp"
#include "surfcalc/report.hpp"

namespace surfcalc {

// Every verifier follows one discipline: the left-hand side is a central
// finite difference of the integral quantity, the right-hand sides are
// quadratures of the theorem's integrands. The two never share a code path,
// so a check cannot degenerate into a tautology.

/// d/dt of the Jacobian determinant along a flow: FD of det vs
/// (div v) det, plus the raw co-factor contraction route.
ResidualReport verify_jacobian_rate(const FlowMap& fm, double t, const Vec3& y, double fd_step,
                                    double tol);

/// Volume transport over a material image of the reference box v0: FD of the
/// pulled-back integral vs the divergence form and the boundary-flux form.
ResidualReport verify_reynolds(const FlowMap& fm, const AmbientScalarField& psi, const Box3& v0,
                               double t, int quad_order, double fd_step, double tol);

/// Surface divergence theorem: tangential-divergence surface integral vs
/// boundary line integral, and the curvature-corrected full form.
ResidualReport verify_surface_divergence(const Chart& chart, const AmbientVectorField& a, double t,
                                         int quad_order, double tol);

/// Surface transport theorem, all five stated right-hand-side forms for an
/// ambient density. forms_tol bounds the mutual agreement of the forms.
ResidualReport verify_surface_transport(const Chart& mc, const AmbientScalarField& psi, double t,
                                        int quad_order, double fd_step, double tol,
                                        double forms_tol = 1e-9);

/// Same for a surface-only density: the three forms that need no normal
/// derivative, plus the remaining two when the density is declared extended
/// constant along normals.
ResidualReport verify_surface_transport(const Chart& mc, const SurfaceScalarField& psi,
                                        bool constant_normal_extension, double t, int quad_order,
                                        double fd_step, double tol, double forms_tol = 1e-9);

/// Control volume bounded by graphs alpha < beta over a shadow rectangle,
/// split by a moving internal graph sigma(t, .) into side 1 (below) and side 2
/// (above). Fields are one-sided; the outer boundary is stationary (the
/// catalog velocity fields are tangential or zero on it), so the moving parts
/// are the interface and whatever v does in the interior.
struct PiecewiseVolumeScenario {
    std::string name;
    Rect2 shadow;
    std::shared_ptr<SurfaceScalarField> alpha, beta;  // static bounds (t ignored)
    std::shared_ptr<SurfaceScalarField> sigma;        // moving interface graph
    std::shared_ptr<AmbientScalarField> psi1, psi2;
    std::shared_ptr<AmbientVectorField> v1, v2;  // null means zero velocity
};

/// Generalized volume transport with a singular interface: FD of the split
/// volume integral vs the jump form and the boundary-flux form.
ResidualReport verify_generalized_reynolds(const PiecewiseVolumeScenario& sc, double t,
                                           int quad_order, double fd_step, double tol,
                                           bool absolute_tol = false, double forms_tol = 1e-9);

/// Degenerate material-interface case (w = v on sigma): the jump integral
/// vanishes and the report must coincide with two independent one-sided
/// volume-transport reports.
ResidualReport verify_material_interface(const PiecewiseVolumeScenario& sc, double t,
                                         int quad_order, double fd_step, double tol,
                                         double degeneracy_tol = 1e-10);

struct PillboxSample {
    double epsilon = 0.0;
    double volume_term = 0.0;     // shrinks linearly with epsilon
    double interface_term = 0.0;  // epsilon-independent jump contribution
};

/// Diagnostic only: shows the volume contribution of a shrinking pillbox
/// around the interface going to zero while the jump term stays. No pass/fail
/// tolerance is attached.
std::vector<PillboxSample> pillbox_sweep(const PiecewiseVolumeScenario& sc, double t,
                                         const std::vector<double>& epsilons, int quad_order);

}  // namespace surfcalc
