// classical.hpp
// The separable classical model for a noisy joint measurement and its
// consequences: conditional response kernels, the unique reconstructed
// hidden-outcome distribution, the complementarity inequality family and its
// compact two-margin form, the inversion kernels recovering noise-free
// statistics, and the search for a measurement violated by a given state.
//
// Throughout, a = mean_x/gamma_x, b = mean_z/gamma_z, c = corr_xz/(gx*gz).
// The reconstructed distribution is (1 + a*x' + b*z' + c*x'z')/4; its four
// entries are nonnegative iff
//     1 - |a - b| >= c >= |a + b| - 1,
// whose two slack values are margin_upper and margin_lower below.

#pragma once

#include <array>

#include "complab/measurement.hpp"
#include "complab/qubit.hpp"

namespace complab {

/// Verdict tolerance: |min margin| <= this means "boundary".
inline constexpr double verdict_tol = 1e-9;

enum class Verdict { satisfied, boundary, violated };

const char* to_string(Verdict v);

Verdict classify_margin(double worst_margin, double tol = verdict_tol);

/// Signed table over hidden outcomes (x',z'); entries sum to 1 but may be
/// negative — a negative entry is the nonclassicality witness.
class ReconstructedDistribution {
public:
    explicit ReconstructedDistribution(const std::array<double, 4>& p);

    double at(int x_prime, int z_prime) const {
        return p_[static_cast<std::size_t>(outcome_index(x_prime, z_prime))];
    }
    const std::array<double, 4>& table() const { return p_; }

    double min_entry() const;

private:
    std::array<double, 4> p_;
};

struct InequalityReport {
    /// Left-hand sides of the four-inequality family, i.e. 4*p_lambda at the
    /// hidden outcomes ordered (+,+), (-,-), (-,+), (+,-).
    std::array<double, 4> four_values{};
    double margin_upper = 0.0;  // 1 - |a-b| - c
    double margin_lower = 0.0;  // 1 + c - |a+b|
    Verdict verdict = Verdict::satisfied;
};

/// p(x|x') = (1 + gamma_x * x * x')/2; gamma_x in (0,1].
double conditional_x(int x, int x_prime, double gamma_x);
/// p(z|z') = (1 + gamma_z * z * z')/2; gamma_z in (0,1].
double conditional_z(int z, int z_prime, double gamma_z);

/// Unique hidden-outcome table consistent with the separable model:
/// p_lambda(x',z') = (1 + a*x' + b*z' + c*x'z')/4.
ReconstructedDistribution reconstruct_p_lambda(const MomentTriple& t, double gamma_x,
                                               double gamma_z);

/// Pushes a hidden-outcome table through the conditional kernels; exact
/// round trip with reconstruct_p_lambda.
JointDistribution forward_model(const ReconstructedDistribution& p_lambda,
                                double gamma_x, double gamma_z);

/// The four values 1 +- a +- b +- c, ordered (+,+), (-,-), (-,+), (+,-).
std::array<double, 4> inequality_family(const MomentTriple& t, double gamma_x,
                                        double gamma_z);

InequalityReport compact_inequality(const MomentTriple& t, double gamma_x,
                                    double gamma_z, double tol = verdict_tol);

/// Same test expressed through the state: a = <s,ax>, b = <s,az>,
/// c = (gamma_xz/(gx*gz)) * <s,n>.  Verdict agrees with the moment form.
InequalityReport state_form_inequality(const BlochState& s, const MeasurementModel& m,
                                       double tol = verdict_tol);

/// Inversion kernel mu(w,w') = (1 + w*w'/gamma_w)/2; may be negative for
/// gamma_w < 1.  gamma_w = 0 is a hard error (the kernel diverges).
double mu_kernel(int w, int w_prime, double gamma_w);

/// Applies the mu kernels to the observed table: the inverted joint
/// distribution of the noise-free observables, with the exact marginals.
ReconstructedDistribution invert_joint(const JointDistribution& d, double gamma_x,
                                       double gamma_z);

struct EquivalenceReport {
    double max_abs_difference = 0.0;
};

/// Max entrywise gap between invert_joint and reconstruct_p_lambda(moments);
/// the two routes compute the same distribution.
EquivalenceReport equivalence_check(const JointDistribution& d, double gamma_x,
                                    double gamma_z);

/// For any state with |s| > 0, builds an admissible measurement the state
/// violates: n = s/|s|, measurement axes completing the orthonormal triad
/// (so <s,ax> = <s,az> = 0 and <s,n> = |s|), gamma_x = gamma_z = g and
/// gamma_xz = sqrt(1 - 2g^2) with g chosen so g^2/gamma_xz = |s|/2, placing
/// the state a factor 2 inside the violating region.
/// Throws for |s| = 0: no violating measurement exists for the identity.
MeasurementModel violation_search(const BlochState& s);

}  // namespace complab
