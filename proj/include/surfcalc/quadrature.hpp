#pragma once

#include <memory>
#include <vector>

#include "surfcalc/chart.hpp"
#include "surfcalc/errors.hpp"
#include "surfcalc/fields.hpp"
#include "surfcalc/frame.hpp"

namespace surfcalc {

/// Gauss-Legendre rule on [-1,1]. Nodes are computed by Newton iteration on
/// the Legendre recurrence; order n integrates polynomials of degree 2n-1
/// exactly. Instances are cached per order.
class GaussLegendre {
public:
    explicit GaussLegendre(int order);

    int order() const { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    static const GaussLegendre& get(int order);

    /// Integrates f over [a, b]; summation order is fixed so results are
    /// bit-reproducible.
    template <class F>
    double integrate(double a, double b, F&& f) const {
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t k = 0; k < nodes_.size(); ++k) s += weights_[k] * f(mid + half * nodes_[k]);
        return half * s;
    }

private:
    std::vector<double> nodes_, weights_;
};

/// Tensor-product integral of f(u1, u2) over a rectangle.
template <class F>
double integrate_rect(const Rect2& r, int order, F&& f) {
    const GaussLegendre& gl = GaussLegendre::get(order);
    return gl.integrate(r.u1_lo, r.u1_hi, [&](double u1) {
        return gl.integrate(r.u2_lo, r.u2_hi, [&](double u2) { return f(u1, u2); });
    });
}

struct Box3 {
    Vec3 lo{}, hi{};
};

/// Tensor-product integral of f(p) over an axis-aligned box.
template <class F>
double integrate_box(const Box3& box, int order, F&& f) {
    const GaussLegendre& gl = GaussLegendre::get(order);
    return gl.integrate(box.lo.x, box.hi.x, [&](double x) {
        return gl.integrate(box.lo.y, box.hi.y, [&](double y) {
            return gl.integrate(box.lo.z, box.hi.z, [&](double z) { return f(Vec3{x, y, z}); });
        });
    });
}

/// Surface integral of an ambient scalar over the chart patch at time t.
double integrate_surface(const Chart& chart, const AmbientScalarField& psi, double t, int order);

/// Surface integral of a surface-defined scalar.
double integrate_surface(const Chart& chart, const SurfaceScalarField& psi, double t, int order);

double surface_area(const Chart& chart, double t, int order);

struct BoundaryIntegral {
    double value = 0.0;
    bool flipped = false;  // orientation assertion against the right-hand rule
};

/// Line integral of a . nu_boundary around the image of the parameter
/// rectangle, traversed counter-clockwise in parameter space. The boundary
/// normal is tau_hat x nu; the right-hand-rule orientation is asserted at an
/// edge midpoint and flipped (and recorded) if it comes out inward.
BoundaryIntegral integrate_boundary(const Chart& chart, const AmbientVectorField& a, double t,
                                    int order);

/// Volume integral over a graph-bounded region:
/// int_shadow int_alpha^beta h dy3 dA. Throws InvertedBounds when
/// alpha >= beta at a quadrature node.
double integrate_graph_volume(const Rect2& shadow, const SurfaceScalarField& alpha,
                              const SurfaceScalarField& beta, const AmbientScalarField& h, double t,
                              int order);

}  // namespace surfcalc
