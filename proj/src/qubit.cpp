#include "complab/qubit.hpp"

#include <algorithm>

namespace complab {

DensityMatrix::DensityMatrix(const Matrix2& m) : m_(m) {
    if (!m.is_hermitian(1e-10)) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(m.trace() - Complex{1.0, 0.0}) > 1e-12) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    if (min_eigenvalue(m) < -1e-9) {
        throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    }
}

DensityMatrix bloch_to_density(const BlochState& s) {
    const Vec3& v = s.vec();
    return DensityMatrix{Matrix2{Complex{0.5 * (1.0 + v.z), 0.0},
                                 Complex{0.5 * v.x, -0.5 * v.y},
                                 Complex{0.5 * v.x, 0.5 * v.y},
                                 Complex{0.5 * (1.0 - v.z), 0.0}}};
}

double expectation(const BlochState& s, const Direction& n) {
    return s.vec().dot(n.vec());
}

double min_eigenvalue(const Matrix2& m) {
    if (!m.is_hermitian(1e-10)) {
        throw std::invalid_argument("min_eigenvalue: matrix is not Hermitian");
    }
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mid = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return mid - radius;
}

std::pair<Direction, Direction> orthonormal_complement(const Direction& n) {
    const Vec3& v = n.vec();
    const std::array<double, 3> mags{std::abs(v.x), std::abs(v.y), std::abs(v.z)};
    const auto smallest =
        std::distance(mags.begin(), std::min_element(mags.begin(), mags.end()));
    Vec3 seed{0.0, 0.0, 0.0};
    (smallest == 0 ? seed.x : smallest == 1 ? seed.y : seed.z) = 1.0;

    const Direction axis_x = Direction::normalized(seed.cross(v));
    const Direction axis_z = Direction::normalized(v.cross(axis_x.vec()));
    return {axis_x, axis_z};
}

}  // namespace complab
