#include <doctest.h>

#include "surfcalc/tensor.hpp"
#include "test_util.hpp"

using namespace surfcalc;
using namespace surfcalc::test;

TEST_CASE("permutation tensor values") {
    CHECK(epsilon3(1, 2, 3) == 1);
    CHECK(epsilon3(2, 3, 1) == 1);
    CHECK(epsilon3(3, 1, 2) == 1);
    CHECK(epsilon3(1, 3, 2) == -1);
    CHECK(epsilon3(3, 2, 1) == -1);
    CHECK(epsilon3(2, 1, 3) == -1);
    CHECK(epsilon3(1, 1, 2) == 0);
    CHECK(epsilon3(2, 2, 2) == 0);
    CHECK_THROWS_AS(epsilon3(0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(epsilon3(1, 2, 4), std::invalid_argument);
}

TEST_CASE("epsilon-delta identity, exhaustive over all index tuples") {
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
            for (int r = 1; r <= 3; ++r)
                for (int s = 1; s <= 3; ++s) {
                    int lhs = 0;
                    for (int i = 1; i <= 3; ++i) lhs += epsilon3(i, j, k) * epsilon3(i, r, s);
                    const int rhs = kronecker(j, r) * kronecker(k, s) - kronecker(j, s) * kronecker(k, r);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("cross product") {
    const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    CHECK(norm(cross(e1, e2) - e3) == 0.0);

    const Vec3 a{0.3, -1.2, 2.0};
    CHECK(norm(cross(a, a)) == 0.0);

    const Vec3 c = cross(Vec3{1, 2, 3}, Vec3{4, 5, 6});
    CHECK(c.x == doctest::Approx(-3.0));
    CHECK(c.y == doctest::Approx(6.0));
    CHECK(c.z == doctest::Approx(-3.0));

    // component identity against the permutation tensor
    const Vec3 b{0.7, 0.1, -0.4};
    const Vec3 ab = cross(a, b);
    for (int i = 1; i <= 3; ++i) {
        double s = 0.0;
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) s += epsilon3(i, j, k) * a[j - 1] * b[k - 1];
        CHECK(ab[i - 1] == doctest::Approx(s).epsilon(1e-14));
    }
}

TEST_CASE("determinants, co-factors, inverses") {
    CHECK(det3(Mat3::identity()) == doctest::Approx(1.0));
    CHECK(det3(Mat3::diag(2, 3, 4)) == doctest::Approx(24.0));

    const Mat3 ci = cofactor3(Mat3::identity());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(ci(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));

    for (int trial = 0; trial < 50; ++trial) {
        const Mat3 A = random_invertible_mat3();
        const Mat3 inv = inverse3(A);
        const Mat3 prod = A * inv;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(prod(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));

        // inverse = cofactor^T / det, componentwise
        const Mat3 C = cofactor3(A);
        const double d = det3(A);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(inv(i, j) == doctest::Approx(C(j, i) / d).epsilon(1e-12));

        // det of the pivot-replacement matrix equals the co-factor contraction
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Mat3 Ajk = A;
                for (int m = 0; m < 3; ++m) {
                    Ajk(j, m) = 0.0;
                    Ajk(m, k) = 0.0;
                }
                Ajk(j, k) = 1.0;
                CHECK(det3(Ajk) == doctest::Approx(C(j, k)).epsilon(1e-12));
            }
    }

    Mat3 singular;
    singular(0, 0) = 1.0;
    singular(1, 0) = 2.0;  // rank 1
    CHECK_THROWS_AS(inverse3(singular), SingularMatrix);
    CHECK_THROWS_AS(inverse2(Mat2{}), SingularMatrix);
}

TEST_CASE("cross-product transform") {
    const Vec3 t1{1, 0, 0}, t2{0, 1, 0};
    CHECK(norm(transform_cross(Mat3::identity(), t1, t2) - Vec3{0, 0, 1}) == 0.0);

    // uniform scaling: det = 8, (A^{-1})^T = I/2, so both routes give 4 e3
    const Vec3 r = transform_cross(Mat3::diag(2, 2, 2), t1, t2);
    CHECK(r.x == doctest::Approx(0.0));
    CHECK(r.y == doctest::Approx(0.0));
    CHECK(r.z == doctest::Approx(4.0));

    for (int trial = 0; trial < 1000; ++trial) {
        const Mat3 A = random_invertible_mat3();
        const Vec3 a = random_vec3(), b = random_vec3();
        const Vec3 direct = cross(A * a, A * b);  // independent left side
        const Vec3 result = transform_cross(A, a, b);
        CHECK(norm(result - direct) <= 1e-12 * std::max(1.0, norm(direct)));
    }
}

TEST_CASE("time-dependent determinant rate against finite differences") {
    // A(t) with polynomial entries; d(det)/dt = cofactor(A) : dA/dt
    auto A_of = [](double t) {
        Mat3 m;
        m(0, 0) = 1.0 + 0.3 * t;
        m(0, 1) = 0.2 * t * t;
        m(0, 2) = -0.1;
        m(1, 0) = 0.5;
        m(1, 1) = 2.0 - t;
        m(1, 2) = 0.4 * t;
        m(2, 0) = -0.3 * t;
        m(2, 1) = 0.1;
        m(2, 2) = 1.5 + 0.2 * t;
        return m;
    };
    const double t0 = 0.3;
    const double fd = central_diff([&](double t) { return det3(A_of(t)); }, t0, 1e-6);

    const Mat3 A = A_of(t0);
    Mat3 Adot;
    Adot(0, 0) = 0.3;
    Adot(0, 1) = 0.4 * t0;
    Adot(1, 1) = -1.0;
    Adot(1, 2) = 0.4;
    Adot(2, 0) = -0.3;
    Adot(2, 2) = 0.2;
    const Mat3 C = cofactor3(A);
    double rate = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) rate += C(j, k) * Adot(j, k);
    CHECK(rate == doctest::Approx(fd).epsilon(1e-8));
}
