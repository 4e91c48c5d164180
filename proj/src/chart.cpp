#include "surfcalc/chart.hpp"

#include <cmath>

namespace surfcalc {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::shared_ptr<Chart> make_plane(double lx, double ly) {
    auto f = [](const auto& t, const auto& u1, const auto& u2) {
        using S = std::decay_t<decltype(t)>;
        return Vec3T<S>{u1, u2, S(0.0)};
    };
    auto implicit = scalar_field([](const auto& t, const auto& x, const auto& y, const auto& z) {
        (void)t;
        (void)x;
        (void)y;
        return z;
    });
    return make_chart({0.0, lx, 0.0, ly}, f, false, implicit);
}

std::shared_ptr<Chart> make_disc(double radius) {
    auto f = [](const auto& t, const auto& r, const auto& th) {
        using S = std::decay_t<decltype(t)>;
        return Vec3T<S>{r * cos(th), r * sin(th), S(0.0)};
    };
    auto implicit = scalar_field([](const auto& t, const auto& x, const auto& y, const auto& z) {
        (void)t;
        (void)x;
        (void)y;
        return z;
    });
    return make_chart({1e-7 * radius, radius, 0.0, 2.0 * kPi}, f, false, implicit);
}

std::shared_ptr<Chart> make_graph(double a, double kx, double ky) {
    auto f = [a, kx, ky](const auto& t, const auto& u1, const auto& u2) {
        using S = std::decay_t<decltype(t)>;
        return Vec3T<S>{u1, u2, a * sin(kx * u1) * cos(ky * u2)};
    };
    auto implicit = scalar_field([a, kx, ky](const auto& t, const auto& x, const auto& y, const auto& z) {
        (void)t;
        return z - a * sin(kx * x) * cos(ky * y);
    });
    return make_chart({0.0, 1.0, 0.0, 1.0}, f, false, implicit);
}

std::shared_ptr<Chart> make_sphere(double radius) {
    return make_sphere_cap(radius, kPi - kPoleMargin);
}

std::shared_ptr<Chart> make_sphere_cap(double radius, double theta_max) {
    auto f = [radius](const auto& t, const auto& th, const auto& ph) {
        using S = std::decay_t<decltype(t)>;
        return Vec3T<S>{radius * sin(th) * cos(ph), radius * sin(th) * sin(ph), radius * cos(th)};
    };
    auto implicit = scalar_field([radius](const auto& t, const auto& x, const auto& y, const auto& z) {
        (void)t;
        return x * x + y * y + z * z - radius * radius;
    });
    return make_chart({kPoleMargin, theta_max, 0.0, 2.0 * kPi}, f, false, implicit);
}

std::shared_ptr<Chart> make_ellipsoid(double a, double b, double c) {
    auto f = [a, b, c](const auto& t, const auto& th, const auto& ph) {
        using S = std::decay_t<decltype(t)>;
        return Vec3T<S>{a * sin(th) * cos(ph), b * sin(th) * sin(ph), c * cos(th)};
    };
    auto implicit = scalar_field([a, b, c](const auto& t, const auto& x, const auto& y, const auto& z) {
        (void)t;
        return (x / a) * (x / a) + (y / b) * (y / b) + (z / c) * (z / c) - 1.0;
    });
    return make_chart({kPoleMargin, kPi - kPoleMargin, 0.0, 2.0 * kPi}, f, false, implicit);
}

std::shared_ptr<Chart> make_torus(double R, double r) {
    auto f = [R, r](const auto& t, const auto& u, const auto& v) {
        using S = std::decay_t<decltype(t)>;
        const auto ring = R + r * cos(v);
        return Vec3T<S>{ring * cos(u), ring * sin(u), r * sin(v)};
    };
    auto implicit = scalar_field([R, r](const auto& t, const auto& x, const auto& y, const auto& z) {
        (void)t;
        const auto rho = sqrt(x * x + y * y);
        return (rho - R) * (rho - R) + z * z - r * r;
    });
    return make_chart({0.0, 2.0 * kPi, 0.0, 2.0 * kPi}, f, false, implicit);
}

std::shared_ptr<Chart> make_translate_plane(double c) {
    auto f = [c](const auto& t, const auto& u1, const auto& u2) {
        using S = std::decay_t<decltype(t)>;
        return Vec3T<S>{u1, u2, c * t};
    };
    auto implicit = scalar_field([c](const auto& t, const auto& x, const auto& y, const auto& z) {
        (void)x;
        (void)y;
        return z - c * t;
    });
    return make_chart({0.0, 1.0, 0.0, 1.0}, f, true, implicit);
}

std::shared_ptr<Chart> make_expand_sphere(double R0, double c) {
    auto f = [R0, c](const auto& t, const auto& th, const auto& ph) {
        using S = std::decay_t<decltype(t)>;
        const auto rad = R0 + c * t;
        return Vec3T<S>{rad * sin(th) * cos(ph), rad * sin(th) * sin(ph), rad * cos(th)};
    };
    auto implicit = scalar_field([R0, c](const auto& t, const auto& x, const auto& y, const auto& z) {
        const auto rad = R0 + c * t;
        return x * x + y * y + z * z - rad * rad;
    });
    return make_chart({kPoleMargin, kPi - kPoleMargin, 0.0, 2.0 * kPi}, f, true, implicit);
}

std::shared_ptr<Chart> make_wave_graph(double a, double k, double omega) {
    auto f = [a, k, omega](const auto& t, const auto& u1, const auto& u2) {
        using S = std::decay_t<decltype(t)>;
        return Vec3T<S>{u1, u2, a * sin(k * u1 - omega * t)};
    };
    auto implicit = scalar_field([a, k, omega](const auto& t, const auto& x, const auto& y, const auto& z) {
        (void)y;
        return z - a * sin(k * x - omega * t);
    });
    return make_chart({0.0, 1.0, 0.0, 1.0}, f, true, implicit);
}

std::shared_ptr<Chart> make_stretch_plane(double rate) {
    auto f = [rate](const auto& t, const auto& u1, const auto& u2) {
        using S = std::decay_t<decltype(t)>;
        return Vec3T<S>{(1.0 + rate * t) * u1, u2, S(0.0)};
    };
    auto implicit = scalar_field([](const auto& t, const auto& x, const auto& y, const auto& z) {
        (void)t;
        (void)x;
        (void)y;
        return z;
    });
    return make_chart({0.0, 1.0, 0.0, 1.0}, f, true, implicit);
}

std::shared_ptr<Chart> make_rotate_sphere(double omega) {
    auto f = [omega](const auto& t, const auto& th, const auto& ph) {
        using S = std::decay_t<decltype(t)>;
        const auto lon = ph + omega * t;
        return Vec3T<S>{sin(th) * cos(lon), sin(th) * sin(lon), cos(th)};
    };
    auto implicit = scalar_field([](const auto& t, const auto& x, const auto& y, const auto& z) {
        (void)t;
        return x * x + y * y + z * z - 1.0;
    });
    return make_chart({kPoleMargin, kPi - kPoleMargin, 0.0, 2.0 * kPi}, f, true, implicit);
}

}  // namespace surfcalc
