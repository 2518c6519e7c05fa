// measurement.hpp
// Noisy joint measurement of two qubit observables: the observed joint
// statistics p(x,z), its moments and marginals, the POVM elements of the
// measurement, and their positivity (admissibility) check.
//
// A measurement is described by noise factors (gamma_x, gamma_z, gamma_xz)
// and a correlation direction n.  The measured observables default to the
// lab sigma_x / sigma_z; custom measurement axes support measurements whose
// coordinate frame is adapted to the state (see violation_search).

#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "complab/qubit.hpp"

namespace complab {

/// Raised when a measurement model cannot produce valid statistics
/// (negative POVM element or negative probability for a given state).
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Outcome pairs (x,z) in canonical table order: (+,+), (+,-), (-,+), (-,-).
inline constexpr std::array<std::array<int, 2>, 4> outcome_order{
    {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}}};

inline int outcome_index(int x, int z) {
    if ((x != 1 && x != -1) || (z != 1 && z != -1)) {
        throw std::invalid_argument("outcome labels must be +1 or -1");
    }
    return (x > 0 ? 0 : 2) + (z > 0 ? 0 : 1);
}

/// Noise triple plus correlation direction n.  A negative gamma_xz passed to
/// the constructor is absorbed into n (n -> -n), so gamma_xz >= 0 always.
/// gamma_x and gamma_z live in [0,1]; the value 0 ("observable not measured")
/// is representable so that boundary measurement families can be expressed,
/// but every inversion-based operation requires strictly positive gammas.
class MeasurementModel {
public:
    MeasurementModel(double gamma_x, double gamma_z, double gamma_xz, Direction n);
    MeasurementModel(double gamma_x, double gamma_z, double gamma_xz, Direction n,
                     Direction axis_x, Direction axis_z);

    double gamma_x() const { return gamma_x_; }
    double gamma_z() const { return gamma_z_; }
    double gamma_xz() const { return gamma_xz_; }
    const Direction& n() const { return n_; }
    const Direction& axis_x() const { return axis_x_; }
    const Direction& axis_z() const { return axis_z_; }
    bool has_default_axes() const { return default_axes_; }

private:
    double gamma_x_;
    double gamma_z_;
    double gamma_xz_;
    Direction n_;
    Direction axis_x_;
    Direction axis_z_;
    bool default_axes_;
};

/// 4-entry probability table over outcomes (x,z); entries >= -1e-12 and
/// summing to 1 within 1e-12.
class JointDistribution {
public:
    static constexpr double negativity_tol = 1e-12;

    explicit JointDistribution(const std::array<double, 4>& p);

    double at(int x, int z) const { return p_[static_cast<std::size_t>(outcome_index(x, z))]; }
    const std::array<double, 4>& table() const { return p_; }

private:
    std::array<double, 4> p_;
};

struct MomentTriple {
    double mean_x = 0.0;
    double mean_z = 0.0;
    double corr_xz = 0.0;
};

/// Single-observable marginals; index 0 holds the +1 outcome, index 1 the -1.
struct Marginals {
    std::array<double, 2> x{};
    std::array<double, 2> z{};
};

/// p(x,z) = (1 + gx*x*<s,ax> + gz*z*<s,az> + gxz*xz*<s,n>)/4.
/// Throws ModelError if any entry falls below -1e-12.
JointDistribution joint_statistics(const BlochState& s, const MeasurementModel& m);

MomentTriple moments(const JointDistribution& d);

Marginals marginals(const JointDistribution& d);

/// POVM elements D(x,z) = (sigma_0 + gx*x*sigma_ax + gz*z*sigma_az
/// + gxz*xz*sigma_n)/4, in canonical outcome order; they sum to the identity.
std::array<Matrix2, 4> povm_elements(const MeasurementModel& m);

struct PovmReport {
    bool admissible = false;
    double worst_eigenvalue = 0.0;
};

/// State-independent admissibility: the model is admissible iff every POVM
/// element is positive semidefinite (worst eigenvalue >= -1e-12).
PovmReport povm_positivity(const MeasurementModel& m);

inline constexpr double povm_positivity_tol = 1e-12;

}  // namespace complab
