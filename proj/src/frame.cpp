#include "surfcalc/frame.hpp"

#include <algorithm>
#include <cmath>

namespace surfcalc {

SurfaceFrame frame_at(const Chart& chart, double t, const Vec2& u) {
    const Vec3T<Jet2_3> P = chart.jet_at(t, u);

    SurfaceFrame fr;
    fr.t = t;
    fr.u = u;
    fr.position = {P.x.val, P.y.val, P.z.val};
    fr.tau1 = {P.x.grad[1], P.y.grad[1], P.z.grad[1]};
    fr.tau2 = {P.x.grad[2], P.y.grad[2], P.z.grad[2]};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            fr.d2phi[a][b] = {P.x.h(a + 1, b + 1), P.y.h(a + 1, b + 1), P.z.h(a + 1, b + 1)};

    const Vec3 n = cross(fr.tau1, fr.tau2);
    const double nn = norm(n);
    if (nn <= kRankTol) throw DegenerateChart("frame_at: |tau1 x tau2| below rank tolerance");
    fr.normal = n / nn;

    fr.metric(0, 0) = dot(fr.tau1, fr.tau1);
    fr.metric(0, 1) = fr.metric(1, 0) = dot(fr.tau1, fr.tau2);
    fr.metric(1, 1) = dot(fr.tau2, fr.tau2);
    fr.det_metric = det2(fr.metric);
    fr.area_element = std::sqrt(fr.det_metric);
    fr.metric_inv = inverse2(fr.metric);

    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) fr.curvature(a, b) = dot(fr.d2phi[a][b], fr.normal);

    double km = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) km += fr.metric_inv(a, b) * fr.curvature(a, b);
    fr.mean_curvature = 0.5 * km;

    for (int g = 0; g < 2; ++g)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double s = 0.0;
                for (int d = 0; d < 2; ++d) s += fr.metric_inv(g, d) * dot(fr.d2phi[a][b], fr.tau(d));
                fr.christoffel[g][a][b] = s;
            }

    fr.velocity = {P.x.grad[0], P.y.grad[0], P.z.grad[0]};
    for (int a = 0; a < 2; ++a)
        fr.dvelocity_du[a] = {P.x.h(0, a + 1), P.y.h(0, a + 1), P.z.h(0, a + 1)};
    fr.normal_speed = dot(fr.velocity, fr.normal);
    fr.velocity_tangential = fr.velocity - fr.normal_speed * fr.normal;

    return fr;
}

Vec3 normal_derivative_at(const SurfaceFrame& fr, int alpha) {
    Vec3 r{};
    for (int b = 0; b < 2; ++b) {
        double coeff = 0.0;
        for (int c = 0; c < 2; ++c) coeff += fr.metric_inv(b, c) * fr.curvature(c, alpha);
        r = r - coeff * fr.tau(b);
    }
    return r;
}

std::array<Vec3T<Jet2_3>, 2> tangent_jets(const Chart& chart, double t, const Vec2& u) {
    const Vec3T<Jet2_3> P = chart.jet_at(t, u);
    std::array<Vec3T<Jet2_3>, 2> taus;
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 3; ++i) {
            Jet2_3 c;
            c.val = P[i].grad[a + 1];
            for (int k = 0; k < 3; ++k) c.grad[k] = P[i].h(a + 1, k);
            taus[a][i] = c;
        }
    return taus;
}

Vec3T<Jet2_3> normal_jet(const Chart& chart, double t, const Vec2& u) {
    const auto taus = tangent_jets(chart, t, u);
    const Vec3T<Jet2_3> n = cross(taus[0], taus[1]);
    if (norm(n).val <= kRankTol) throw DegenerateChart("normal_jet: rank-deficient chart");
    return normalized(n);
}

Vec2 covariant_derivative_surface_vector(const Chart& chart, double t, const Vec2& u,
                                         const SurfaceVectorField2& a, int gamma) {
    const SurfaceFrame fr = frame_at(chart, t, u);
    const Vec2T<Jet2_3> aj = a.jet_at(t, u);

    Vec2 r{};
    for (int alpha = 0; alpha < 2; ++alpha) {
        double s = aj[alpha].grad[gamma + 1];
        for (int d = 0; d < 2; ++d) s += fr.christoffel[alpha][d][gamma] * aj[d].val;
        r[alpha] = s;
    }
    return r;
}

Vec3 covariant_derivative_tangent(const Chart& chart, double t, const Vec2& u, int alpha, int beta) {
    const SurfaceFrame fr = frame_at(chart, t, u);
    Vec3 v = fr.d2phi[alpha][beta];
    for (int g = 0; g < 2; ++g) v = v - fr.christoffel[g][alpha][beta] * fr.tau(g);

    const Vec3 expected = fr.curvature(alpha, beta) * fr.normal;
    const double scale = std::max({norm(v), norm(expected), 1.0});
    if (norm(v - expected) > 1e-10 * scale)
        throw NumericalError("covariant_derivative_tangent: result is not b_{ab} nu");
    return v;
}

Mat2 covariant_derivative_metric(const Chart& chart, double t, const Vec2& u, int gamma) {
    const SurfaceFrame fr = frame_at(chart, t, u);
    const auto taus = tangent_jets(chart, t, u);

    Mat2 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const double dg = dot(taus[a], taus[b]).grad[gamma + 1];
            double corr = 0.0;
            for (int d = 0; d < 2; ++d)
                corr += fr.christoffel[d][a][gamma] * fr.metric(d, b) +
                        fr.christoffel[d][b][gamma] * fr.metric(a, d);
            r(a, b) = dg - corr;
        }
    return r;
}

}  // namespace surfcalc
