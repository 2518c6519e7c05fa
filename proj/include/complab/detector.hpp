// detector.hpp
// Detector-centric description of the noisy joint measurement: a Q-like
// quasi-classical state distribution over four coherent-state directions,
// the most general detector response kernel consistent with the noise
// factors, its positivity and factorization conditions, the admissible
// region in the (gamma_x, gamma_z) plane, and the inverted kernel whose
// positivity window is provably empty.
//
// This module fixes n = e_y: the correlation channel reads sigma_y.
// Closed-form positivity flags are always cross-checkable against the
// brute-force table minima, which the reports carry as the source of truth.

#pragma once

#include <array>
#include <vector>

#include "complab/measurement.hpp"
#include "complab/qubit.hpp"

namespace complab {

/// Noise triple for the detector description (n = e_y implied).
struct GammaTriple {
    double x = 0.0;
    double z = 0.0;
    double xz = 0.0;
};

/// Coherent-state direction attached to the hidden outcome (x',z'):
/// unit vector (x', x'z', z')/sqrt(3) in (e_x, e_y, e_z) components.
Vec3 coherent_direction(int x_prime, int z_prime);

/// Nonnegative quasi-classical distribution over the four hidden outcomes.
///
/// The normalized entry is (1 + <s, n(x',z')>)/4, which sums to 1 and is the
/// weight entering the detector-kernel reconstruction identity.  The overlap
/// accessor returns tr[rho(s) rho(n)] = (1 + <s,n>)/2 = 2 * entry, the
/// projection of the state onto the coherent state at (x',z').  (Quoted with
/// a 1/2 prefactor in places, that form sums to 2 and breaks reconstruction;
/// the 1/4 normalization is the one the identity singles out.)
class QLikeDistribution {
public:
    explicit QLikeDistribution(const BlochState& s);

    double at(int x_prime, int z_prime) const {
        return p_[static_cast<std::size_t>(outcome_index(x_prime, z_prime))];
    }
    double overlap(int x_prime, int z_prime) const { return 2.0 * at(x_prime, z_prime); }
    const std::array<double, 4>& table() const { return p_; }

private:
    std::array<double, 4> p_;
};

QLikeDistribution q_like_distribution(const BlochState& s);

/// Conditional table q(x,z|x',z') = [1 + sqrt(3)(gx*x*x' + gz*z*z'
/// + gxz*xz*x'z')]/4; every column is normalized over (x,z).
class DetectorKernel {
public:
    explicit DetectorKernel(const GammaTriple& g);

    double at(int x, int z, int x_prime, int z_prime) const {
        return q_[static_cast<std::size_t>(outcome_index(x, z))]
                 [static_cast<std::size_t>(outcome_index(x_prime, z_prime))];
    }
    const GammaTriple& gammas() const { return g_; }
    double min_entry() const;

    /// Recovers the observed statistics: sum_{x',z'} q(.|x',z') * weights.
    std::array<double, 4> apply(const QLikeDistribution& p_lambda) const;

private:
    std::array<std::array<double, 4>, 4> q_;
    GammaTriple g_;
};

DetectorKernel detector_kernel(const GammaTriple& g);

struct KernelPositivityReport {
    bool positive = false;       // brute-force: min table entry >= -1e-12
    double min_entry = 0.0;      // brute-force minimum over the 16 entries
    bool closed_form = false;    // the two-inequality condition, same tolerance
    double upper_slack = 0.0;    // 1 - sqrt(3)|gx - gz| - sqrt(3) gxz
    double lower_slack = 0.0;    // sqrt(3) gxz - (sqrt(3)(gx + gz) - 1)
};

KernelPositivityReport kernel_positivity(const GammaTriple& g);

struct FactorizationReport {
    bool factorizes = false;
    double defect = 0.0;  // |gxz - sqrt(3) gx gz|
};

FactorizationReport kernel_factorization(const GammaTriple& g);

/// Single-observable response kernel (1 + sqrt(3) gamma w w')/2 induced by a
/// factorized detector kernel.
double factor_kernel(int w, int w_prime, double gamma);

/// For a factorizing triple: both single-observable kernels nonnegative,
/// which holds iff gamma_x <= 1/sqrt(3) and gamma_z <= 1/sqrt(3).
/// Throws if the triple does not factorize.
bool factorized_positivity(const GammaTriple& g);

struct RegionPoint {
    double gamma_x = 0.0;
    double gamma_z = 0.0;
    bool in_povm_region = false;       // gx^2 + gz^2 + 3 gx^2 gz^2 <= 1
    bool in_positive_square = false;   // gx <= 1/sqrt(3) and gz <= 1/sqrt(3)
};

struct RegionScan {
    std::vector<RegionPoint> grid;                  // row-major over [0,1]^2
    std::vector<std::array<double, 2>> boundary;    // (gx, gz) on the curve
};

/// Regular grid over [0,1]^2 plus the analytic boundary curve
/// gz(gx) = sqrt((1 - gx^2)/(1 + 3 gx^2)).
RegionScan povm_factorized_region(int grid_resolution, int jobs = 1);

struct InvertedKernel {
    std::array<std::array<double, 4>, 4> q{};  // [outcome][hidden outcome]
    double sqrt3_ratio = 0.0;      // sqrt(3) gxz / (gx gz)
    double upper_allowed = 0.0;    // 1
    double lower_required = 0.0;   // 2 sqrt(3) - 1
    bool interval_empty = false;   // lower_required > upper_allowed
    bool ratio_within_bounds = false;
    double min_entry = 0.0;        // brute-force minimum; always negative

    double at(int x, int z, int xp, int zp) const {
        return q[static_cast<std::size_t>(outcome_index(x, z))]
                [static_cast<std::size_t>(outcome_index(xp, zp))];
    }
};

/// q(x,z|x'',z'') = [1 + sqrt(3)(x x'' + z z'' + R xz x''z'')]/4 with
/// R = gxz/(gx gz).  Nonnegativity would need 1 >= sqrt(3) R >= 2 sqrt(3)-1,
/// an empty window, so the report always carries a negative entry.
InvertedKernel inverted_kernel(const GammaTriple& g);

}  // namespace complab
