#pragma once

#include <array>
#include <cmath>

#include "surfcalc/errors.hpp"
#include "surfcalc/jet.hpp"

namespace surfcalc {

// -----------------------------------------------------------------------------
// Small fixed-size vectors, templated on the scalar so charts and fields can be
// evaluated on doubles or on jets with the same code.
// -----------------------------------------------------------------------------

template <class T>
struct Vec2T {
    T x{}, y{};

    T& operator[](int i) { return i == 0 ? x : y; }
    const T& operator[](int i) const { return i == 0 ? x : y; }

    friend Vec2T operator+(const Vec2T& a, const Vec2T& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2T operator-(const Vec2T& a, const Vec2T& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2T operator*(const T& s, const Vec2T& v) { return {s * v.x, s * v.y}; }
    friend Vec2T operator*(const Vec2T& v, const T& s) { return {v.x * s, v.y * s}; }
    friend T dot(const Vec2T& a, const Vec2T& b) { return a.x * b.x + a.y * b.y; }
};

template <class T>
struct Vec3T {
    T x{}, y{}, z{};

    T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const T& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3T& operator+=(const Vec3T& b) {
        x += b.x;
        y += b.y;
        z += b.z;
        return *this;
    }
    Vec3T operator-() const { return {-x, -y, -z}; }
    friend Vec3T operator+(const Vec3T& a, const Vec3T& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3T operator-(const Vec3T& a, const Vec3T& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3T operator*(const T& s, const Vec3T& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend Vec3T operator*(const Vec3T& v, const T& s) { return {v.x * s, v.y * s, v.z * s}; }
    friend Vec3T operator/(const Vec3T& v, const T& s) { return {v.x / s, v.y / s, v.z / s}; }

    friend T dot(const Vec3T& a, const Vec3T& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    friend Vec3T cross(const Vec3T& a, const Vec3T& b) {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }
    friend T norm(const Vec3T& v) {
        using std::sqrt;
        return sqrt(dot(v, v));
    }
    friend Vec3T normalized(const Vec3T& v) { return v / norm(v); }
};

using Vec2 = Vec2T<double>;
using Vec3 = Vec3T<double>;

inline double norm(const Vec2& v) { return std::sqrt(v.x * v.x + v.y * v.y); }

// -----------------------------------------------------------------------------
// Permutation tensor and the cross product / determinant identities built on it.
// -----------------------------------------------------------------------------

/// epsilon_{ijk} with 1-based indices in {1,2,3}.
inline int epsilon3(int i, int j, int k) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3)
        throw std::invalid_argument("epsilon3: index out of range");
    if (i == j || j == k || i == k) return 0;
    // even cyclic permutations of 123
    if ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1)) return 1;
    return -1;
}

inline int kronecker(int i, int j) { return i == j ? 1 : 0; }

// -----------------------------------------------------------------------------
// Dense 2x2 and 3x3 matrices (double scalars).
// -----------------------------------------------------------------------------

/// Relative singularity tolerance: a matrix is treated as singular when
/// |det| <= kSingularRel * max-row-norm.
inline constexpr double kSingularRel = 1e-12;

struct Mat2 {
    std::array<std::array<double, 2>, 2> a{};

    double& operator()(int i, int j) { return a[i][j]; }
    double operator()(int i, int j) const { return a[i][j]; }

    static Mat2 identity() {
        Mat2 m;
        m.a = {{{1.0, 0.0}, {0.0, 1.0}}};
        return m;
    }
    static Mat2 diag(double d0, double d1) {
        Mat2 m;
        m.a[0][0] = d0;
        m.a[1][1] = d1;
        return m;
    }
};

inline double det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline double row_norm_inf(const Mat2& m) {
    const double r0 = std::abs(m(0, 0)) + std::abs(m(0, 1));
    const double r1 = std::abs(m(1, 0)) + std::abs(m(1, 1));
    return std::max(r0, r1);
}

inline Mat2 inverse2(const Mat2& m) {
    const double d = det2(m);
    if (std::abs(d) <= kSingularRel * row_norm_inf(m))
        throw SingularMatrix("inverse2: |det| below singularity tolerance");
    Mat2 r;
    r(0, 0) = m(1, 1) / d;
    r(0, 1) = -m(0, 1) / d;
    r(1, 0) = -m(1, 0) / d;
    r(1, 1) = m(0, 0) / d;
    return r;
}

struct Mat3 {
    std::array<std::array<double, 3>, 3> a{};

    double& operator()(int i, int j) { return a[i][j]; }
    double operator()(int i, int j) const { return a[i][j]; }

    static Mat3 identity() {
        Mat3 m;
        for (int i = 0; i < 3; ++i) m.a[i][i] = 1.0;
        return m;
    }
    static Mat3 diag(double d0, double d1, double d2) {
        Mat3 m;
        m.a[0][0] = d0;
        m.a[1][1] = d1;
        m.a[2][2] = d2;
        return m;
    }
    static Mat3 outer(const Vec3& u, const Vec3& v) {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.a[i][j] = u[i] * v[j];
        return m;
    }

    friend Mat3 operator+(const Mat3& p, const Mat3& q) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.a[i][j] = p.a[i][j] + q.a[i][j];
        return r;
    }
    friend Mat3 operator-(const Mat3& p, const Mat3& q) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.a[i][j] = p.a[i][j] - q.a[i][j];
        return r;
    }
    friend Mat3 operator*(double s, const Mat3& m) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.a[i][j] = s * m.a[i][j];
        return r;
    }
    friend Vec3 operator*(const Mat3& m, const Vec3& v) {
        Vec3 r;
        for (int i = 0; i < 3; ++i) r[i] = m(i, 0) * v.x + m(i, 1) * v.y + m(i, 2) * v.z;
        return r;
    }
    template <class T>
    friend Vec3T<T> operator*(const Mat3& m, const Vec3T<T>& v) {
        Vec3T<T> r;
        for (int i = 0; i < 3; ++i)
            r[i] = v.x * m(i, 0) + v.y * m(i, 1) + v.z * m(i, 2);
        return r;
    }
    friend Mat3 operator*(const Mat3& p, const Mat3& q) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += p.a[i][k] * q.a[k][j];
                r.a[i][j] = s;
            }
        return r;
    }
};

inline Mat3 transpose(const Mat3& m) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.a[i][j] = m.a[j][i];
    return r;
}

inline double det3(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

inline double row_norm_inf(const Mat3& m) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        r = std::max(r, std::abs(m(i, 0)) + std::abs(m(i, 1)) + std::abs(m(i, 2)));
    return r;
}

/// Matrix of co-factors C_{jk} = det A_{jk}, where A_{jk} is A with row j and
/// column k replaced by zeros except a unit pivot. Satisfies
/// det A_{jk} = a^{kj} det A and A^{-1} = C^T / det A.
inline Mat3 cofactor3(const Mat3& m) {
    Mat3 c;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            const int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
            // signed minor; the cyclic index choice folds in (-1)^{j+k}
            c(j, k) = m(j1, k1) * m(j2, k2) - m(j1, k2) * m(j2, k1);
        }
    return c;
}

inline Mat3 inverse3(const Mat3& m) {
    const double d = det3(m);
    if (std::abs(d) <= kSingularRel * row_norm_inf(m))
        throw SingularMatrix("inverse3: |det| below singularity tolerance");
    const Mat3 c = cofactor3(m);
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = c(j, i) / d;
    return r;
}

/// Returns A t1 x A t2. Internally cross-checks the co-factor route
/// det(A) (A^{-T}) (t1 x t2) against the direct product and throws
/// NumericalError if the two disagree beyond 1e-12 relative.
Vec3 transform_cross(const Mat3& A, const Vec3& t1, const Vec3& t2);

}  // namespace surfcalc
