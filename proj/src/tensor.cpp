#include "surfcalc/tensor.hpp"

#include <algorithm>

namespace surfcalc {

Vec3 transform_cross(const Mat3& A, const Vec3& t1, const Vec3& t2) {
    const Vec3 direct = cross(A * t1, A * t2);
    const Vec3 via_inverse = det3(A) * (transpose(inverse3(A)) * cross(t1, t2));

    const double scale = std::max({norm(direct), norm(via_inverse), 1e-300});
    if (norm(direct - via_inverse) > 1e-12 * scale)
        throw NumericalError("transform_cross: inverse-transpose route disagrees with direct product");
    return direct;
}

}  // namespace surfcalc
