#pragma once

#include <array>
#include <cmath>

namespace surfcalc {

/// Second-order truncated Taylor number in N independent variables.
///
/// Carries a value, the gradient with respect to the declared variables and
/// the symmetric matrix of second partials. Arithmetic propagates exact
/// chain/product rules, so charts and fields written as ordinary formulas
/// yield exact first and second derivatives when evaluated on Jet2 inputs.
///
/// The Hessian is stored packed (upper triangle), so hess(i,j) == hess(j,i)
/// holds exactly by construction. The variable count is a compile-time
/// parameter: jets over different variable sets do not mix.
template <int N>
class Jet2 {
public:
    static constexpr int kVars = N;
    static constexpr int kHessSize = N * (N + 1) / 2;

    double val = 0.0;
    std::array<double, N> grad{};
    std::array<double, kHessSize> hess{};  // packed upper triangle, row-major

    constexpr Jet2() = default;
    constexpr Jet2(double v) : val(v) {}  // NOLINT: constants promote implicitly

    static constexpr int hindex(int i, int j) {
        if (i > j) {
            const int t = i;
            i = j;
            j = t;
        }
        return i * N - i * (i + 1) / 2 + j;
    }
    double h(int i, int j) const { return hess[hindex(i, j)]; }
    double& h(int i, int j) { return hess[hindex(i, j)]; }

    static Jet2 constant(double v) { return Jet2(v); }
    static Jet2 variable(double v, int index) {
        Jet2 j(v);
        j.grad[index] = 1.0;
        return j;
    }

    Jet2 operator-() const {
        Jet2 r;
        r.val = -val;
        for (int i = 0; i < N; ++i) r.grad[i] = -grad[i];
        for (int i = 0; i < kHessSize; ++i) r.hess[i] = -hess[i];
        return r;
    }

    Jet2& operator+=(const Jet2& b) {
        val += b.val;
        for (int i = 0; i < N; ++i) grad[i] += b.grad[i];
        for (int i = 0; i < kHessSize; ++i) hess[i] += b.hess[i];
        return *this;
    }
    Jet2& operator-=(const Jet2& b) {
        val -= b.val;
        for (int i = 0; i < N; ++i) grad[i] -= b.grad[i];
        for (int i = 0; i < kHessSize; ++i) hess[i] -= b.hess[i];
        return *this;
    }
    Jet2& operator*=(const Jet2& b) { return *this = *this * b; }
    Jet2& operator/=(const Jet2& b) { return *this = *this / b; }

    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }

    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        Jet2 r;
        r.val = a.val * b.val;
        for (int i = 0; i < N; ++i) r.grad[i] = a.grad[i] * b.val + a.val * b.grad[i];
        for (int i = 0; i < N; ++i)
            for (int j = i; j < N; ++j)
                r.h(i, j) = a.h(i, j) * b.val + a.grad[i] * b.grad[j] + a.grad[j] * b.grad[i] +
                            a.val * b.h(i, j);
        return r;
    }
    friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

    /// f(u) with f0 = f(u.val), f1 = f'(u.val), f2 = f''(u.val).
    friend Jet2 chain(const Jet2& u, double f0, double f1, double f2) {
        Jet2 r;
        r.val = f0;
        for (int i = 0; i < N; ++i) r.grad[i] = f1 * u.grad[i];
        for (int i = 0; i < N; ++i)
            for (int j = i; j < N; ++j) r.h(i, j) = f1 * u.h(i, j) + f2 * u.grad[i] * u.grad[j];
        return r;
    }

    friend Jet2 reciprocal(const Jet2& u) {
        const double iv = 1.0 / u.val;
        return chain(u, iv, -iv * iv, 2.0 * iv * iv * iv);
    }
    friend Jet2 sin(const Jet2& u) { return chain(u, std::sin(u.val), std::cos(u.val), -std::sin(u.val)); }
    friend Jet2 cos(const Jet2& u) { return chain(u, std::cos(u.val), -std::sin(u.val), -std::cos(u.val)); }
    friend Jet2 exp(const Jet2& u) {
        const double e = std::exp(u.val);
        return chain(u, e, e, e);
    }
    friend Jet2 log(const Jet2& u) { return chain(u, std::log(u.val), 1.0 / u.val, -1.0 / (u.val * u.val)); }
    friend Jet2 sqrt(const Jet2& u) {
        const double s = std::sqrt(u.val);
        return chain(u, s, 0.5 / s, -0.25 / (s * u.val));
    }
    friend Jet2 pow(const Jet2& u, double p) {
        const double f0 = std::pow(u.val, p);
        return chain(u, f0, p * std::pow(u.val, p - 1.0), p * (p - 1.0) * std::pow(u.val, p - 2.0));
    }
    friend Jet2 tanh(const Jet2& u) {
        const double th = std::tanh(u.val);
        const double s = 1.0 - th * th;
        return chain(u, th, s, -2.0 * th * s);
    }
};

using Jet2_2 = Jet2<2>;  // (t, q) curve parameters
using Jet2_3 = Jet2<3>;  // (t, u1, u2) surface parameters
using Jet2_4 = Jet2<4>;  // (t, x1, x2, x3) ambient space-time

/// Value extraction that works in scalar-generic code (doubles or jets),
/// e.g. to branch a piecewise-polynomial definition.
inline double jet_value(double x) { return x; }
template <int N>
double jet_value(const Jet2<N>& x) {
    return x.val;
}

}  // namespace surfcalc
