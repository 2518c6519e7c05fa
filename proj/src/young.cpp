#include "complab/young.hpp"

#include <cmath>
#include <limits>

#include "parallel.hpp"

namespace complab {

Matrix4 Matrix4::operator*(const Matrix4& o) const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const Complex v = (*this)(i, k);
            if (v == Complex{}) continue;
            for (int j = 0; j < 4; ++j) {
                r(i, j) += v * o(k, j);
            }
        }
    }
    return r;
}

Matrix4 Matrix4::operator+(const Matrix4& o) const {
    Matrix4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix4 Matrix4::operator-(const Matrix4& o) const {
    Matrix4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix4 Matrix4::adjoint() const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r(i, j) = std::conj((*this)(j, i));
        }
    }
    return r;
}

Complex Matrix4::trace() const { return e_[0] + e_[5] + e_[10] + e_[15]; }

double Matrix4::max_abs() const {
    double worst = 0.0;
    for (const Complex& v : e_) worst = std::max(worst, std::abs(v));
    return worst;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
    Matrix4 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return r;
}

YoungSetting::YoungSetting(double theta, double phi, bool allow_full_circle)
    : theta_(theta), phi_(phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::invalid_argument("YoungSetting: angles must be finite");
    }
    if (!allow_full_circle) {
        constexpr double hi = M_PI / 2 + 1e-12;
        if (theta < -1e-12 || theta > hi || phi < -1e-12 || phi > hi) {
            throw std::invalid_argument("YoungSetting: angles outside [0, pi/2]");
        }
    }
}

Matrix4 marking_unitary(double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    Matrix4 u;
    // path |+> block: rotation by +theta/2
    u(0, 0) = c;
    u(0, 1) = -s;
    u(1, 0) = s;
    u(1, 1) = c;
    // path |-> block: rotation by -theta/2
    u(2, 2) = c;
    u(2, 3) = s;
    u(3, 2) = -s;
    u(3, 3) = c;
    return u;
}

Matrix2 sigma_phi(double phi) {
    const Complex e_plus{std::cos(phi), std::sin(phi)};
    return {0.0, e_plus, std::conj(e_plus), 0.0};
}

std::array<Complex, 2> sigma_phi_eigenvector(int z, double phi) {
    if (z != 1 && z != -1) {
        throw std::invalid_argument("sigma_phi_eigenvector: z must be +1 or -1");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex e_minus{std::cos(phi), -std::sin(phi)};
    return {Complex{inv_sqrt2, 0.0}, static_cast<double>(z) * inv_sqrt2 * e_minus};
}

Matrix2 sigma_phi_projector(int z, double phi) {
    const auto v = sigma_phi_eigenvector(z, phi);
    return {v[0] * std::conj(v[0]), v[0] * std::conj(v[1]), v[1] * std::conj(v[0]),
            v[1] * std::conj(v[1])};
}

MeasurementModel gammas_from_angles(const YoungSetting& y) {
    const double st = std::sin(y.theta());
    return MeasurementModel(std::cos(y.theta()), std::cos(y.phi()) * st,
                            std::sin(y.phi()) * st, Direction::y_axis());
}

JointDistribution full_quantum_joint(const BlochState& s, const YoungSetting& y) {
    const Matrix2 right_circular{1.0, 0.0, 0.0, 0.0};  // |R><R|
    const Matrix4 rho = kron(bloch_to_density(s).matrix(), right_circular);
    const Matrix4 u = marking_unitary(y.theta());
    const Matrix4 evolved = u * rho * u.adjoint();

    std::array<double, 4> p{};
    for (std::size_t i = 0; i < 4; ++i) {
        const int x = outcome_order[i][0];
        const int z = outcome_order[i][1];
        const Matrix2 screen =
            (Matrix2::identity() + pauli_x() * static_cast<double>(x)) * 0.5;
        const Matrix4 projector = kron(screen, sigma_phi_projector(z, y.phi()));
        p[i] = (projector * evolved).trace().real();
    }
    return JointDistribution(p);
}

double nonclassicality_factor(const YoungSetting& y) {
    if (y.phi() <= 0.0) {
        throw std::invalid_argument(
            "nonclassicality_factor: correlation channel closed at phi = 0, "
            "factor infinite, no violation possible");
    }
    return std::cos(y.theta()) / std::tan(y.phi());
}

SweepRow young_row(const BlochState& s, double theta, double phi) {
    const YoungSetting setting{theta, phi};
    const MeasurementModel m = gammas_from_angles(setting);

    SweepRow row;
    row.theta = theta;
    row.phi = phi;
    row.gamma_x = m.gamma_x();
    row.gamma_z = m.gamma_z();
    row.gamma_xz = m.gamma_xz();
    row.factor = (phi == 0.0) ? std::numeric_limits<double>::infinity()
                              : std::cos(theta) / std::tan(phi);

    const double sx = s.vec().x;
    const double sz = s.vec().z;
    const double correlation = m.gamma_xz() * s.vec().y;
    double c = 0.0;
    if (correlation != 0.0) {
        const double den = m.gamma_x() * m.gamma_z();
        c = (den > 0.0) ? correlation / den
                        : std::copysign(std::numeric_limits<double>::infinity(),
                                        correlation);
    }
    row.margin_upper = 1.0 - std::abs(sx - sz) - c;
    row.margin_lower = 1.0 + c - std::abs(sx + sz);
    row.verdict = classify_margin(std::min(row.margin_upper, row.margin_lower));

    const JointDistribution simulated = full_quantum_joint(s, setting);
    const JointDistribution closed = joint_statistics(s, m);
    double dev = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        dev = std::max(dev, std::abs(simulated.table()[i] - closed.table()[i]));
    }
    row.max_dev = dev;
    return row;
}

std::vector<SweepRow> young_sweep(const BlochState& s, int theta_steps, int phi_steps,
                                  int jobs) {
    if (theta_steps < 2 || phi_steps < 2) {
        throw std::invalid_argument("young_sweep: need at least 2 steps per axis");
    }
    const std::size_t total =
        static_cast<std::size_t>(theta_steps) * static_cast<std::size_t>(phi_steps);
    std::vector<SweepRow> rows(total);
    const double dt = (M_PI / 2) / (theta_steps - 1);
    const double dp = (M_PI / 2) / (phi_steps - 1);

    parallel_for(total, jobs, [&](std::size_t idx) {
        const int ti = static_cast<int>(idx) / phi_steps;
        const int pi = static_cast<int>(idx) % phi_steps;
        rows[idx] = young_row(s, ti * dt, pi * dp);
    });
    return rows;
}

}  // namespace complab
