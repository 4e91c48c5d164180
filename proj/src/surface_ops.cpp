#include "surfcalc/surface_ops.hpp"

namespace surfcalc {

Decomposition decompose(const Vec3& a, const SurfaceFrame& fr) {
    Decomposition d;
    d.normal_component = dot(a, fr.normal);
    d.tangential = a - d.normal_component * fr.normal;
    for (int alpha = 0; alpha < 2; ++alpha) {
        double s = 0.0;
        for (int b = 0; b < 2; ++b) s += fr.metric_inv(alpha, b) * dot(a, fr.tau(b));
        d.contravariant[alpha] = s;
    }
    return d;
}

std::pair<Mat3, Mat3> projector(const SurfaceFrame& fr) {
    const Mat3 N = Mat3::outer(fr.normal, fr.normal);
    const Mat3 T = Mat3::identity() - N;
    return {N, T};
}

Vec3 surface_gradient(const AmbientScalarField& psi, const SurfaceFrame& fr) {
    const Vec3 g = psi.gradient(fr.t, fr.position);
    return g - dot(g, fr.normal) * fr.normal;
}

Jet2_3 restrict_to_chart(const AmbientScalarField& psi, const Chart& chart, double t, const Vec2& u) {
    const Vec3T<Jet2_3> P = chart.jet_at(t, u);
    return psi.eval_j3(Jet2_3::variable(t, 0), P.x, P.y, P.z);
}

Vec3T<Jet2_3> restrict_to_chart(const AmbientVectorField& a, const Chart& chart, double t,
                                const Vec2& u) {
    const Vec3T<Jet2_3> P = chart.jet_at(t, u);
    return a.eval_j3(Jet2_3::variable(t, 0), P.x, P.y, P.z);
}

Vec3 surface_gradient_parametric(const AmbientScalarField& psi, const Chart& chart, double t,
                                 const Vec2& u) {
    const SurfaceFrame fr = frame_at(chart, t, u);
    const Jet2_3 comp = restrict_to_chart(psi, chart, t, u);
    Vec3 r{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) r = r + fr.metric_inv(a, b) * comp.grad[a + 1] * fr.tau(b);
    return r;
}

Vec3 surface_gradient(const SurfaceScalarField& psi, const Chart& chart, double t, const Vec2& u) {
    const SurfaceFrame fr = frame_at(chart, t, u);
    const Jet2_3 comp = psi.jet_at(t, u);
    Vec3 r{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) r = r + fr.metric_inv(a, b) * comp.grad[a + 1] * fr.tau(b);
    return r;
}

double surface_divergence(const AmbientVectorField& a, const SurfaceFrame& fr) {
    const Mat3 J = a.jacobian(fr.t, fr.position);
    double div = 0.0;
    for (int i = 0; i < 3; ++i) div += J(i, i);
    double corr = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) corr += J(i, j) * fr.normal[j] * fr.normal[i];
    return div - corr;
}

double parametric_divergence(const Vec3T<Jet2_3>& b, const SurfaceFrame& fr) {
    double s = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int be = 0; be < 2; ++be) {
            double da_dot_tau = 0.0;
            for (int i = 0; i < 3; ++i) da_dot_tau += b[i].grad[a + 1] * fr.tau(be)[i];
            s += fr.metric_inv(a, be) * da_dot_tau;
        }
    return s;
}

double surface_divergence_parametric(const AmbientVectorField& a, const Chart& chart, double t,
                                     const Vec2& u) {
    const SurfaceFrame fr = frame_at(chart, t, u);
    return parametric_divergence(restrict_to_chart(a, chart, t, u), fr);
}

DivergenceSplit surface_divergence_split(const AmbientVectorField& a, const Chart& chart, double t,
                                         const Vec2& u) {
    const SurfaceFrame fr = frame_at(chart, t, u);
    const Vec3T<Jet2_3> aj = restrict_to_chart(a, chart, t, u);
    const Vec3T<Jet2_3> nu = normal_jet(chart, t, u);

    const Jet2_3 a_nu = dot(aj, nu);
    Vec3T<Jet2_3> tangential;
    for (int i = 0; i < 3; ++i) tangential[i] = aj[i] - a_nu * nu[i];

    DivergenceSplit split;
    split.tangential = parametric_divergence(tangential, fr);
    split.curvature_term = -2.0 * fr.mean_curvature * a_nu.val;
    return split;
}

double kelvin_stokes_tangential_divergence(const AmbientVectorField& a,
                                           const AmbientScalarField& levelset, double t,
                                           const Vec3& x) {
    using J = Jet2_4;
    const J f = levelset.jet_at(t, x);

    // unit normal as a first-order space-time jet of grad f / |grad f|
    Vec3T<J> nu;
    for (int i = 0; i < 3; ++i) {
        J gi;
        gi.val = f.grad[i + 1];
        for (int k = 0; k < 4; ++k) gi.grad[k] = f.h(i + 1, k);
        nu[i] = gi;
    }
    const J mag = norm(nu);
    if (mag.val <= 0.0) throw VanishingGradient("kelvin_stokes: |grad f| vanishes");
    nu = nu / mag;

    const Vec3T<J> aj = a.jet_at(t, x);
    const Vec3T<J> b = cross(nu, aj);

    // (curl b) . nu using first spatial derivatives; indices 1..3 are x
    const Vec3 curl{b.z.grad[2] - b.y.grad[3], b.x.grad[3] - b.z.grad[1], b.y.grad[1] - b.x.grad[2]};
    const Vec3 n{nu.x.val, nu.y.val, nu.z.val};
    return dot(curl, n);
}

}  // namespace surfcalc
