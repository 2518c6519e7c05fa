#include "complab/measurement.hpp"

#include <cmath>
#include <limits>

namespace complab {

namespace {

void check_gamma_range(double g, const char* name) {
    if (!std::isfinite(g) || g > 1.0 || g < 0.0) {
        throw std::invalid_argument(std::string("MeasurementModel: ") + name +
                                    " out of range [0,1]");
    }
}

}  // namespace

MeasurementModel::MeasurementModel(double gamma_x, double gamma_z, double gamma_xz,
                                   Direction n)
    : MeasurementModel(gamma_x, gamma_z, gamma_xz, n, Direction::x_axis(),
                       Direction::z_axis()) {
    default_axes_ = true;
}

MeasurementModel::MeasurementModel(double gamma_x, double gamma_z, double gamma_xz,
                                   Direction n, Direction axis_x, Direction axis_z)
    : gamma_x_(gamma_x),
      gamma_z_(gamma_z),
      gamma_xz_(std::abs(gamma_xz)),
      n_(gamma_xz < 0.0 ? n.flipped() : n),
      axis_x_(axis_x),
      axis_z_(axis_z),
      default_axes_(false) {
    check_gamma_range(gamma_x_, "gamma_x");
    check_gamma_range(gamma_z_, "gamma_z");
    check_gamma_range(gamma_xz_, "gamma_xz");
}

JointDistribution::JointDistribution(const std::array<double, 4>& p) : p_(p) {
    double sum = 0.0;
    for (double v : p_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("JointDistribution: entries must be finite");
        }
        if (v < -negativity_tol) {
            throw std::invalid_argument("JointDistribution: negative entry");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("JointDistribution: entries do not sum to 1");
    }
}

JointDistribution joint_statistics(const BlochState& s, const MeasurementModel& m) {
    const double sx = s.vec().dot(m.axis_x().vec());
    const double sz = s.vec().dot(m.axis_z().vec());
    const double sn = s.vec().dot(m.n().vec());

    const double tx = m.gamma_x() * sx;
    const double tz = m.gamma_z() * sz;
    const double txz = m.gamma_xz() * sn;

    std::array<double, 4> p{};
    for (std::size_t i = 0; i < 4; ++i) {
        const double x = outcome_order[i][0];
        const double z = outcome_order[i][1];
        p[i] = 0.25 * (1.0 + x * tx + z * tz + x * z * txz);
        if (p[i] < -JointDistribution::negativity_tol) {
            throw ModelError("joint_statistics: model not admissible for this state "
                             "(negative probability " +
                             std::to_string(p[i]) + ")");
        }
    }
    return JointDistribution(p);
}

MomentTriple moments(const JointDistribution& d) {
    MomentTriple t;
    for (std::size_t i = 0; i < 4; ++i) {
        const double x = outcome_order[i][0];
        const double z = outcome_order[i][1];
        const double p = d.table()[i];
        t.mean_x += x * p;
        t.mean_z += z * p;
        t.corr_xz += x * z * p;
    }
    return t;
}

Marginals marginals(const JointDistribution& d) {
    Marginals m;
    m.x = {d.at(+1, +1) + d.at(+1, -1), d.at(-1, +1) + d.at(-1, -1)};
    m.z = {d.at(+1, +1) + d.at(-1, +1), d.at(+1, -1) + d.at(-1, -1)};
    return m;
}

std::array<Matrix2, 4> povm_elements(const MeasurementModel& m) {
    const Matrix2 tx = pauli_dot(m.axis_x().vec()) * (0.25 * m.gamma_x());
    const Matrix2 tz = pauli_dot(m.axis_z().vec()) * (0.25 * m.gamma_z());
    const Matrix2 txz = pauli_dot(m.n().vec()) * (0.25 * m.gamma_xz());
    const Matrix2 base = Matrix2::identity() * 0.25;

    std::array<Matrix2, 4> elems;
    for (std::size_t i = 0; i < 4; ++i) {
        const double x = outcome_order[i][0];
        const double z = outcome_order[i][1];
        elems[i] = base + tx * x + tz * z + txz * (x * z);
    }
    return elems;
}

PovmReport povm_positivity(const MeasurementModel& m) {
    double worst = std::numeric_limits<double>::infinity();
    for (const Matrix2& e : povm_elements(m)) {
        worst = std::min(worst, min_eigenvalue(e));
    }
    return {worst >= -povm_positivity_tol, worst};
}

}  // namespace complab
