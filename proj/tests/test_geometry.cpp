#include <doctest.h>

#include <cmath>

#include "surfcalc/chart.hpp"
#include "surfcalc/frame.hpp"
#include "test_util.hpp"

using namespace surfcalc;
using namespace surfcalc::test;

namespace {
constexpr double kPi = 3.14159265358979323846;

// closed-form unit-sphere package in the (theta, phi) chart
struct SphereOracle {
    double theta, phi;
    double g11() const { return 1.0; }
    double g22() const { return std::sin(theta) * std::sin(theta); }
    double b11() const { return -1.0; }
    double b22() const { return -std::sin(theta) * std::sin(theta); }
    double kappa() const { return -1.0; }
    double gamma_theta_phiphi() const { return -std::sin(theta) * std::cos(theta); }
    double gamma_phi_thetaphi() const { return 1.0 / std::tan(theta); }
};

std::vector<std::shared_ptr<Chart>> catalog_charts() {
    return {make_plane(), make_disc(), make_graph(0.1, 3.0, 2.0), make_sphere(),
            make_ellipsoid(1.0, 1.3, 0.8), make_torus(2.0, 0.5)};
}

Vec2 random_param(const Chart& c) {
    const Rect2 d = c.domain();
    return {uniform(d.u1_lo + 0.02 * (d.u1_hi - d.u1_lo), d.u1_hi - 0.02 * (d.u1_hi - d.u1_lo)),
            uniform(d.u2_lo + 0.02 * (d.u2_hi - d.u2_lo), d.u2_hi - 0.02 * (d.u2_hi - d.u2_lo))};
}

}  // namespace

TEST_CASE("plane frame is flat") {
    const auto plane = make_plane();
    const SurfaceFrame fr = frame_at(*plane, 0.0, {0.3, 0.8});
    CHECK(fr.metric(0, 0) == doctest::Approx(1.0));
    CHECK(fr.metric(0, 1) == doctest::Approx(0.0));
    CHECK(fr.metric(1, 1) == doctest::Approx(1.0));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(fr.curvature(a, b) == doctest::Approx(0.0));
            for (int g = 0; g < 2; ++g) CHECK(fr.christoffel[g][a][b] == doctest::Approx(0.0));
        }
    CHECK(fr.mean_curvature == doctest::Approx(0.0));
    CHECK(norm(fr.normal - Vec3{0, 0, 1}) == doctest::Approx(0.0));
}

TEST_CASE("unit sphere matches the closed-form package") {
    const auto sphere = make_sphere();

    SUBCASE("equator point") {
        const SurfaceFrame fr = frame_at(*sphere, 0.0, {kPi / 2.0, 0.0});
        CHECK(fr.metric(0, 0) == doctest::Approx(1.0));
        CHECK(fr.metric(1, 1) == doctest::Approx(1.0));
        CHECK(fr.area_element == doctest::Approx(1.0));
        CHECK(fr.curvature(0, 0) == doctest::Approx(-1.0));
        CHECK(fr.curvature(1, 1) == doctest::Approx(-1.0));
        CHECK(fr.mean_curvature == doctest::Approx(-1.0));
        CHECK(norm(fr.normal - Vec3{1, 0, 0}) < 1e-14);  // outward
    }

    SUBCASE("christoffel symbols at theta = pi/3") {
        const SurfaceFrame fr = frame_at(*sphere, 0.0, {kPi / 3.0, 0.7});
        CHECK(fr.christoffel[0][1][1] == doctest::Approx(-std::sqrt(3.0) / 4.0).epsilon(1e-12));
        CHECK(fr.christoffel[1][0][1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
        CHECK(fr.christoffel[1][1][0] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    }

    SUBCASE("50 random points") {
        for (int i = 0; i < 50; ++i) {
            const double theta = uniform(0.1, kPi - 0.1), phi = uniform(0.0, 2.0 * kPi);
            const SphereOracle o{theta, phi};
            const SurfaceFrame fr = frame_at(*sphere, 0.0, {theta, phi});
            CHECK(std::abs(fr.metric(0, 0) - o.g11()) <= 1e-10);
            CHECK(std::abs(fr.metric(1, 1) - o.g22()) <= 1e-10);
            CHECK(std::abs(fr.metric(0, 1)) <= 1e-10);
            CHECK(std::abs(fr.curvature(0, 0) - o.b11()) <= 1e-10);
            CHECK(std::abs(fr.curvature(1, 1) - o.b22()) <= 1e-10);
            CHECK(std::abs(fr.curvature(0, 1)) <= 1e-10);
            CHECK(std::abs(fr.mean_curvature - o.kappa()) <= 1e-10);
            CHECK(std::abs(fr.christoffel[0][1][1] - o.gamma_theta_phiphi()) <= 1e-10);
            CHECK(std::abs(fr.christoffel[1][0][1] - o.gamma_phi_thetaphi()) <= 1e-10);
        }
    }
}

TEST_CASE("torus mean curvature matches the closed form") {
    const double R = 2.0, r = 0.5;
    const auto torus = make_torus(R, r);
    for (int i = 0; i < 50; ++i) {
        const double u = uniform(0.0, 2.0 * kPi), v = uniform(0.0, 2.0 * kPi);
        const SurfaceFrame fr = frame_at(*torus, 0.0, {u, v});
        const double expected = -(R + 2.0 * r * std::cos(v)) / (2.0 * r * (R + r * std::cos(v)));
        CHECK(std::abs(fr.mean_curvature - expected) <= 1e-10);
    }
}

TEST_CASE("frame invariants hold at 100 random points per catalog chart") {
    for (const auto& chart : catalog_charts()) {
        for (int i = 0; i < 100; ++i) {
            const Vec2 u = random_param(*chart);
            const SurfaceFrame fr = frame_at(*chart, 0.0, u);

            CHECK(std::abs(norm(fr.normal) - 1.0) <= 1e-14);
            CHECK(std::abs(dot(fr.normal, fr.tau1)) <= 1e-12 * norm(fr.tau1));
            CHECK(std::abs(dot(fr.normal, fr.tau2)) <= 1e-12 * norm(fr.tau2));

            CHECK(fr.metric(0, 0) > 0.0);
            CHECK(fr.det_metric > 0.0);
            CHECK(fr.metric(0, 1) == fr.metric(1, 0));

            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    double e = 0.0;
                    for (int k = 0; k < 2; ++k) e += fr.metric_inv(a, k) * fr.metric(k, b);
                    CHECK(std::abs(e - (a == b ? 1.0 : 0.0)) <= 1e-12);
                }

            CHECK(std::abs(norm(cross(fr.tau1, fr.tau2)) - fr.area_element) <=
                  1e-12 * fr.area_element);
            CHECK(fr.curvature(0, 1) == doctest::Approx(fr.curvature(1, 0)).epsilon(1e-13));
            for (int g = 0; g < 2; ++g)
                CHECK(fr.christoffel[g][0][1] ==
                      doctest::Approx(fr.christoffel[g][1][0]).epsilon(1e-12));
        }
    }
}

TEST_CASE("normal derivative: closed forms and the jet oracle") {
    SUBCASE("plane: constant normal") {
        const auto plane = make_plane();
        const SurfaceFrame fr = frame_at(*plane, 0.0, {0.4, 0.6});
        for (int a = 0; a < 2; ++a) CHECK(norm(normal_derivative_at(fr, a)) <= 1e-14);
    }

    SUBCASE("unit sphere at the equator: dnu/dtheta = +tau_theta") {
        const auto sphere = make_sphere();
        const SurfaceFrame fr = frame_at(*sphere, 0.0, {kPi / 2.0, 0.3});
        const Vec3 d = normal_derivative_at(fr, 0);
        CHECK(norm(d - fr.tau1) <= 1e-12);
        CHECK(std::abs(dot(d, fr.normal)) <= 1e-12);
    }

    SUBCASE("agrees with jet differentiation of the normalized normal") {
        for (const auto& chart : catalog_charts()) {
            for (int i = 0; i < 20; ++i) {
                const Vec2 u = random_param(*chart);
                const SurfaceFrame fr = frame_at(*chart, 0.0, u);
                const Vec3T<Jet2_3> nu = normal_jet(*chart, 0.0, u);
                for (int a = 0; a < 2; ++a) {
                    const Vec3 weingarten = normal_derivative_at(fr, a);
                    const Vec3 jet{nu.x.grad[a + 1], nu.y.grad[a + 1], nu.z.grad[a + 1]};
                    CHECK(norm(weingarten - jet) <= 1e-8);
                    CHECK(std::abs(dot(weingarten, fr.normal)) <= 1e-12 * std::max(1.0, norm(weingarten)));
                }
            }
        }
    }
}

TEST_CASE("covariant derivative of a contravariant surface vector") {
    SUBCASE("plane, constant components: zero") {
        const auto plane = make_plane();
        const auto a = surface_vector2([](const auto& t, const auto&, const auto&) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return Vec2T<S>{S(0.7), S(-0.3)};
        });
        for (int g = 0; g < 2; ++g) {
            const Vec2 d = covariant_derivative_surface_vector(*plane, 0.0, {0.2, 0.9}, *a, g);
            CHECK(std::abs(d.x) <= 1e-14);
            CHECK(std::abs(d.y) <= 1e-14);
        }
    }

    SUBCASE("sphere, a = (1,0), gamma = phi at theta = pi/3") {
        const auto sphere = make_sphere();
        const auto a = surface_vector2([](const auto& t, const auto&, const auto&) {
            using S = std::decay_t<decltype(t)>;
            (void)t;
            return Vec2T<S>{S(1.0), S(0.0)};
        });
        const Vec2 d = covariant_derivative_surface_vector(*sphere, 0.0, {kPi / 3.0, 0.4}, *a, 1);
        CHECK(std::abs(d.x - 0.0) <= 1e-12);
        CHECK(std::abs(d.y - 1.0 / std::sqrt(3.0)) <= 1e-12);
    }

    SUBCASE("metrinilic property on catalog charts") {
        for (const auto& chart : catalog_charts()) {
            for (int i = 0; i < 10; ++i) {
                const Vec2 u = random_param(*chart);
                for (int g = 0; g < 2; ++g) {
                    const Mat2 d = covariant_derivative_metric(*chart, 0.0, u, g);
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b) CHECK(std::abs(d(a, b)) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("covariant derivative of tangents is purely normal") {
    SUBCASE("plane: zero") {
        const auto plane = make_plane();
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                CHECK(norm(covariant_derivative_tangent(*plane, 0.0, {0.5, 0.5}, a, b)) <= 1e-14);
    }

    SUBCASE("sphere at the equator, alpha = beta = theta: - normal") {
        const auto sphere = make_sphere();
        const SurfaceFrame fr = frame_at(*sphere, 0.0, {kPi / 2.0, 1.1});
        const Vec3 d = covariant_derivative_tangent(*sphere, 0.0, {kPi / 2.0, 1.1}, 0, 0);
        CHECK(norm(d - (-1.0) * fr.normal) <= 1e-12);
    }

    SUBCASE("symmetry in (alpha, beta) on catalog charts") {
        for (const auto& chart : catalog_charts()) {
            const Vec2 u = random_param(*chart);
            const Vec3 d01 = covariant_derivative_tangent(*chart, 0.0, u, 0, 1);
            const Vec3 d10 = covariant_derivative_tangent(*chart, 0.0, u, 1, 0);
            CHECK(norm(d01 - d10) <= 1e-12 * std::max(1.0, norm(d01)));
        }
    }
}

TEST_CASE("reparametrization leaves the geometry invariant") {
    // same sphere traversed with a doubled azimuthal rate
    const auto sphere = make_sphere();
    const auto reparam = make_chart({kPoleMargin, kPi - kPoleMargin, 0.0, kPi},
                                    [](const auto& t, const auto& th, const auto& ph) {
                                        using S = std::decay_t<decltype(t)>;
                                        (void)t;
                                        const auto lon = 2.0 * ph;
                                        return Vec3T<S>{sin(th) * cos(lon), sin(th) * sin(lon), cos(th)};
                                    });
    for (int i = 0; i < 30; ++i) {
        const double theta = uniform(0.1, kPi - 0.1), phi2 = uniform(0.0, kPi);
        const SurfaceFrame a = frame_at(*reparam, 0.0, {theta, phi2});
        const SurfaceFrame b = frame_at(*sphere, 0.0, {theta, 2.0 * phi2});
        CHECK(std::abs(a.mean_curvature - b.mean_curvature) <= 1e-10);
        CHECK(norm(a.normal - b.normal) <= 1e-10);
        CHECK(norm(a.position - b.position) <= 1e-12);
    }
}

TEST_CASE("degenerate charts are rejected") {
    // rank-1 map: both tangents parallel
    const auto degenerate = make_chart({0.0, 1.0, 0.0, 1.0},
                                       [](const auto& t, const auto& u1, const auto& u2) {
                                           using S = std::decay_t<decltype(t)>;
                                           (void)t;
                                           return Vec3T<S>{u1 + u2, u1 + u2, S(0.0)};
                                       });
    CHECK_THROWS_AS(frame_at(*degenerate, 0.0, {0.5, 0.5}), DegenerateChart);
}
