#pragma once

#include <cmath>
#include <random>

#include "surfcalc/tensor.hpp"

namespace surfcalc::test {

/// Central difference d/dx f at x; the independent oracle used against every
/// jet- or formula-based derivative.
template <class F>
double central_diff(F&& f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Second central difference.
template <class F>
double central_diff2(F&& f, double x, double h = 1e-4) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240901u);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Vec3 random_vec3(double lo = -1.0, double hi = 1.0) {
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
}

/// Random matrix with |det| bounded away from zero (rejection).
inline Mat3 random_invertible_mat3(double min_abs_det = 0.1) {
    while (true) {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = uniform(-1.0, 1.0);
        if (std::abs(det3(m)) >= min_abs_det) return m;
    }
}

}  // namespace surfcalc::test
