#include <doctest.h>

#include <cmath>

#include "surfcalc/jet.hpp"
#include "test_util.hpp"

using namespace surfcalc;
using namespace surfcalc::test;

namespace {

// reference function with all the arithmetic the charts and fields use
template <class S>
S reference_fn(const S& x, const S& y) {
    return sin(x * y) + exp(0.3 * x) / (2.0 + cos(y)) + sqrt(1.0 + x * x) * pow(2.0 + y, 1.7) -
           log(3.0 + x + y) + tanh(0.5 * x);
}

}  // namespace

TEST_CASE("jet gradient and hessian match finite differences") {
    const double pts[][2] = {{0.3, -0.4}, {1.1, 0.7}, {-0.8, 0.2}, {0.0, 0.0}};
    for (const auto& p : pts) {
        const double x0 = p[0], y0 = p[1];
        const Jet2<2> r = reference_fn(Jet2<2>::variable(x0, 0), Jet2<2>::variable(y0, 1));

        CHECK(r.val == doctest::Approx(reference_fn(x0, y0)).epsilon(1e-14));

        auto fx = [&](double x) { return reference_fn(x, y0); };
        auto fy = [&](double y) { return reference_fn(x0, y); };
        CHECK(r.grad[0] == doctest::Approx(central_diff(fx, x0)).epsilon(1e-8));
        CHECK(r.grad[1] == doctest::Approx(central_diff(fy, y0)).epsilon(1e-8));

        CHECK(r.h(0, 0) == doctest::Approx(central_diff2(fx, x0)).epsilon(1e-5));
        CHECK(r.h(1, 1) == doctest::Approx(central_diff2(fy, y0)).epsilon(1e-5));

        // mixed partial against a nested difference
        auto dfdx = [&](double y) {
            return central_diff([&](double x) { return reference_fn(x, y); }, x0, 1e-5);
        };
        CHECK(r.h(0, 1) == doctest::Approx(central_diff(dfdx, y0, 1e-5)).epsilon(1e-5));
    }
}

TEST_CASE("hessian symmetry is structural") {
    Jet2<3> a = Jet2<3>::variable(0.7, 0), b = Jet2<3>::variable(-0.2, 1), c = Jet2<3>::variable(1.3, 2);
    const Jet2<3> r = a * b * sin(c) + exp(a * c) / (2.0 + b * b);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(r.h(i, j) == r.h(j, i));  // exact: packed storage
}

TEST_CASE("finite-difference convergence order of the oracle is ~2") {
    // sanity for the oracles themselves: halving h shrinks the error ~4x
    auto f = [](double x) { return std::exp(std::sin(3.0 * x)); };
    const double x0 = 0.4;
    const double exact = 3.0 * std::cos(3.0 * x0) * std::exp(std::sin(3.0 * x0));
    const double e1 = std::abs(central_diff(f, x0, 1e-2) - exact);
    const double e2 = std::abs(central_diff(f, x0, 5e-3) - exact);
    const double order = std::log2(e1 / e2);
    CHECK(order >= 1.9);
}

TEST_CASE("chain rule through division and composition") {
    // f(u) with u itself a function of (x, y): d/dx f(u(x,y)) etc.
    auto u_fn = [](auto x, auto y) { return x * x - 0.5 * y + 1.5; };
    auto f_fn = [](auto u) { return (u * u + 1.0) / (u + 3.0); };

    const double x0 = 0.6, y0 = -0.9;
    const Jet2<2> u = u_fn(Jet2<2>::variable(x0, 0), Jet2<2>::variable(y0, 1));
    const Jet2<2> r = f_fn(u);

    auto scalar = [&](double x, double y) { return f_fn(u_fn(x, y)); };
    CHECK(r.grad[0] ==
          doctest::Approx(central_diff([&](double x) { return scalar(x, y0); }, x0)).epsilon(1e-9));
    CHECK(r.h(0, 1) ==
          doctest::Approx(central_diff(
                              [&](double y) {
                                  return central_diff([&](double x) { return scalar(x, y); }, x0, 1e-5);
                              },
                              y0, 1e-5))
              .epsilon(1e-5));
}

TEST_CASE("constants and variables") {
    const auto c = Jet2<4>::constant(2.5);
    CHECK(c.val == 2.5);
    for (int i = 0; i < 4; ++i) CHECK(c.grad[i] == 0.0);

    const auto v = Jet2<4>::variable(1.5, 2);
    CHECK(v.grad[2] == 1.0);
    CHECK(v.grad[0] == 0.0);

    const auto s = c * v + 1.0;  // implicit double promotion
    CHECK(s.val == doctest::Approx(4.75));
    CHECK(s.grad[2] == doctest::Approx(2.5));
}
