// qubit.hpp
// Two-level quantum state algebra: Bloch vectors, density matrices,
// Pauli expectation values, and closed-form 2x2 Hermitian eigenvalues.
//
// Pauli convention used throughout the project:
//   sigma_x = [[0,1],[1,0]], sigma_y = [[0,-i],[i,0]], sigma_z = [[1,0],[0,-1]].

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace complab {

using Complex = std::complex<double>;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double k) const { return {k * x, k * y, k * z}; }
};

/// 2x2 complex matrix, row-major storage.
class Matrix2 {
public:
    Matrix2() = default;
    Matrix2(Complex m00, Complex m01, Complex m10, Complex m11)
        : e_{m00, m01, m10, m11} {}

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 zero() { return {}; }

    Complex& operator()(int r, int c) { return e_[static_cast<std::size_t>(2 * r + c)]; }
    const Complex& operator()(int r, int c) const {
        return e_[static_cast<std::size_t>(2 * r + c)];
    }

    Matrix2 operator+(const Matrix2& o) const {
        return {e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2], e_[3] + o.e_[3]};
    }
    Matrix2 operator-(const Matrix2& o) const {
        return {e_[0] - o.e_[0], e_[1] - o.e_[1], e_[2] - o.e_[2], e_[3] - o.e_[3]};
    }
    Matrix2 operator*(const Matrix2& o) const {
        return {e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]};
    }
    Matrix2 operator*(Complex k) const { return {k * e_[0], k * e_[1], k * e_[2], k * e_[3]}; }
    Matrix2 operator*(double k) const { return *this * Complex{k, 0.0}; }

    Complex trace() const { return e_[0] + e_[3]; }
    Matrix2 adjoint() const {
        return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
    }

    double max_abs_diff(const Matrix2& o) const {
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) {
            worst = std::max(worst, std::abs(e_[static_cast<std::size_t>(i)] -
                                             o.e_[static_cast<std::size_t>(i)]));
        }
        return worst;
    }

    bool is_hermitian(double tol) const {
        return std::abs(e_[0].imag()) <= tol && std::abs(e_[3].imag()) <= tol &&
               std::abs(e_[1] - std::conj(e_[2])) <= tol;
    }

private:
    std::array<Complex, 4> e_{};
};

inline Matrix2 operator*(double k, const Matrix2& m) { return m * k; }

inline const Matrix2& pauli_x() {
    static const Matrix2 m{0.0, 1.0, 1.0, 0.0};
    return m;
}
inline const Matrix2& pauli_y() {
    static const Matrix2 m{0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0};
    return m;
}
inline const Matrix2& pauli_z() {
    static const Matrix2 m{1.0, 0.0, 0.0, -1.0};
    return m;
}

/// v . sigma for a real 3-vector v.
inline Matrix2 pauli_dot(const Vec3& v) {
    return {Complex{v.z, 0.0}, Complex{v.x, -v.y}, Complex{v.x, v.y}, Complex{-v.z, 0.0}};
}

/// Bloch vector s of a qubit state rho = (1 + s.sigma)/2; |s| <= 1.
class BlochState {
public:
    static constexpr double norm_tol = 1e-9;

    BlochState(double sx, double sy, double sz) : BlochState(Vec3{sx, sy, sz}) {}
    explicit BlochState(const Vec3& s) : s_(s) {
        if (!std::isfinite(s.x) || !std::isfinite(s.y) || !std::isfinite(s.z)) {
            throw std::invalid_argument("BlochState: components must be finite");
        }
        if (s.norm() > 1.0 + norm_tol) {
            throw std::invalid_argument("BlochState: unphysical state (|s| > 1)");
        }
    }

    const Vec3& vec() const { return s_; }
    double norm() const { return s_.norm(); }

private:
    Vec3 s_;
};

/// Real unit 3-vector (|n| = 1 within 1e-12).
class Direction {
public:
    static constexpr double unit_tol = 1e-12;

    Direction(double nx, double ny, double nz) : Direction(Vec3{nx, ny, nz}) {}
    explicit Direction(const Vec3& n) : n_(n) {
        if (std::abs(n.norm() - 1.0) > unit_tol) {
            throw std::invalid_argument("Direction: vector is not unit length");
        }
    }

    /// Rescales an arbitrary nonzero vector to unit length.
    static Direction normalized(const Vec3& v) {
        const double len = v.norm();
        if (!(len > 0.0) || !std::isfinite(len)) {
            throw std::invalid_argument("Direction: cannot normalize a zero vector");
        }
        return Direction(Vec3{v.x / len, v.y / len, v.z / len}, unchecked_tag{});
    }

    static Direction x_axis() { return Direction{1.0, 0.0, 0.0}; }
    static Direction y_axis() { return Direction{0.0, 1.0, 0.0}; }
    static Direction z_axis() { return Direction{0.0, 0.0, 1.0}; }

    const Vec3& vec() const { return n_; }
    Direction flipped() const { return Direction(-n_, unchecked_tag{}); }

private:
    struct unchecked_tag {};
    Direction(const Vec3& n, unchecked_tag) : n_(n) {}
    Vec3 n_;
};

/// Valid qubit density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
public:
    explicit DensityMatrix(const Matrix2& m);

    const Matrix2& matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

private:
    Matrix2 m_;
};

/// rho = (sigma_0 + s.sigma)/2.
DensityMatrix bloch_to_density(const BlochState& s);

/// <sigma_n> = s . n.
double expectation(const BlochState& s, const Direction& n);

/// Smaller eigenvalue of a Hermitian 2x2 matrix, closed form.
/// Throws if the matrix is not Hermitian within 1e-10.
double min_eigenvalue(const Matrix2& m);

/// Deterministic completion of n to an orthonormal triad (axis_x, axis_z, n):
/// the lab axis with the smallest |component along n| seeds the cross products.
std::pair<Direction, Direction> orthonormal_complement(const Direction& n);

}  // namespace complab
