#include "surfcalc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace surfcalc {

GaussLegendre::GaussLegendre(int order) {
    if (order < 2) throw std::invalid_argument("GaussLegendre: order must be >= 2");
    nodes_.resize(order);
    weights_.resize(order);

    const int n = order;
    for (int k = 0; k < (n + 1) / 2; ++k) {
        // Chebyshev-based initial guess, then Newton on P_n(x)
        double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute P_{n-1} at the converged node for the weight
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);

        nodes_[k] = -x;  // ascending order
        nodes_[n - 1 - k] = x;
        weights_[k] = w;
        weights_[n - 1 - k] = w;
    }
}

const GaussLegendre& GaussLegendre::get(int order) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<GaussLegendre>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, std::make_unique<GaussLegendre>(order)).first;
    return *it->second;
}

double integrate_surface(const Chart& chart, const AmbientScalarField& psi, double t, int order) {
    return integrate_rect(chart.domain(), order, [&](double u1, double u2) {
        const SurfaceFrame fr = frame_at(chart, t, {u1, u2});
        return psi.value(t, fr.position) * fr.area_element;
    });
}

double integrate_surface(const Chart& chart, const SurfaceScalarField& psi, double t, int order) {
    return integrate_rect(chart.domain(), order, [&](double u1, double u2) {
        const SurfaceFrame fr = frame_at(chart, t, {u1, u2});
        return psi.value(t, {u1, u2}) * fr.area_element;
    });
}

double surface_area(const Chart& chart, double t, int order) {
    return integrate_rect(chart.domain(), order, [&](double u1, double u2) {
        return frame_at(chart, t, {u1, u2}).area_element;
    });
}

namespace {

struct Edge {
    // parameter-space segment from p0 to p1 (straight), traversed p0 -> p1
    Vec2 p0, p1;
    Vec2 outward;  // parameter-space outward direction of the rectangle
};

// Position, tangents and unit normal only; no metric inversion, so this stays
// usable on boundary edges that run close to a chart degeneracy (disc center,
// sphere pole margins) where the line integrand vanishes anyway.
struct EdgePoint {
    Vec3 position, tau1, tau2, normal;
};

EdgePoint edge_point(const Chart& chart, double t, const Vec2& u) {
    const Vec3T<Jet2_3> P = chart.jet_at(t, u);
    EdgePoint p;
    p.position = {P.x.val, P.y.val, P.z.val};
    p.tau1 = {P.x.grad[1], P.y.grad[1], P.z.grad[1]};
    p.tau2 = {P.x.grad[2], P.y.grad[2], P.z.grad[2]};
    const Vec3 n = cross(p.tau1, p.tau2);
    const double nn = norm(n);
    if (nn <= kRankTol) throw DegenerateChart("integrate_boundary: rank-deficient chart on edge");
    p.normal = n / nn;
    return p;
}

}  // namespace

BoundaryIntegral integrate_boundary(const Chart& chart, const AmbientVectorField& a, double t,
                                    int order) {
    const Rect2 d = chart.domain();
    // counter-clockwise in parameter space
    const Edge edges[4] = {
        {{d.u1_lo, d.u2_lo}, {d.u1_hi, d.u2_lo}, {0.0, -1.0}},
        {{d.u1_hi, d.u2_lo}, {d.u1_hi, d.u2_hi}, {1.0, 0.0}},
        {{d.u1_hi, d.u2_hi}, {d.u1_lo, d.u2_hi}, {0.0, 1.0}},
        {{d.u1_lo, d.u2_hi}, {d.u1_lo, d.u2_lo}, {-1.0, 0.0}},
    };

    BoundaryIntegral result;

    // orientation assertion at the midpoint of the first edge
    {
        const Edge& e = edges[0];
        const Vec2 mid{0.5 * (e.p0.x + e.p1.x), 0.5 * (e.p0.y + e.p1.y)};
        const EdgePoint p = edge_point(chart, t, mid);
        const Vec2 dir{e.p1.x - e.p0.x, e.p1.y - e.p0.y};
        const Vec3 tangent = dir.x * p.tau1 + dir.y * p.tau2;
        const Vec3 nu_boundary = cross(normalized(tangent), p.normal);
        const Vec3 outward_vec = e.outward.x * p.tau1 + e.outward.y * p.tau2;
        if (dot(nu_boundary, outward_vec) < 0.0) result.flipped = true;
    }
    const double sign = result.flipped ? -1.0 : 1.0;

    const GaussLegendre& gl = GaussLegendre::get(order);
    double total = 0.0;
    for (const Edge& e : edges) {
        const Vec2 dir{e.p1.x - e.p0.x, e.p1.y - e.p0.y};
        total += gl.integrate(0.0, 1.0, [&](double s) {
            const Vec2 u{e.p0.x + s * dir.x, e.p0.y + s * dir.y};
            const EdgePoint p = edge_point(chart, t, u);
            const Vec3 curve_tangent = dir.x * p.tau1 + dir.y * p.tau2;  // dPhi/ds
            const double dl = norm(curve_tangent);
            if (dl == 0.0) return 0.0;
            const Vec3 nu_boundary = cross(curve_tangent / dl, p.normal);
            return dot(a.value(t, p.position), nu_boundary) * dl;
        });
    }
    result.value = sign * total;
    return result;
}

double integrate_graph_volume(const Rect2& shadow, const SurfaceScalarField& alpha,
                              const SurfaceScalarField& beta, const AmbientScalarField& h, double t,
                              int order) {
    const GaussLegendre& gl = GaussLegendre::get(order);
    return integrate_rect(shadow, order, [&](double y1, double y2) {
        const double a = alpha.value(t, {y1, y2});
        const double b = beta.value(t, {y1, y2});
        if (a >= b) throw InvertedBounds("integrate_graph_volume: alpha >= beta at a node");
        return gl.integrate(a, b, [&](double y3) { return h.value(t, {y1, y2, y3}); });
    });
}

}  // namespace surfcalc
