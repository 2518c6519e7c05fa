// sampling.hpp
// Finite-statistics simulation of the joint measurement: seedable draws from
// a 4-outcome distribution, moment estimates with binomial standard errors,
// and inequality margins with first-order propagated uncertainties.
//
// Draws use std::mt19937_64 seeded directly with the user seed; each draw
// maps the top 53 engine bits to a uniform double and walks the cumulative
// table.  The standard is explicit about the engine's output sequence, so
// identical (distribution, n, seed) gives identical counts on any platform.

#pragma once

#include <array>
#include <cstdint>

#include "complab/classical.hpp"
#include "complab/measurement.hpp"

namespace complab {

struct EmpiricalCounts {
    std::array<std::uint64_t, 4> counts{};  // canonical outcome order
    std::uint64_t total = 0;
    std::uint64_t seed = 0;

    std::uint64_t at(int x, int z) const {
        return counts[static_cast<std::size_t>(outcome_index(x, z))];
    }
};

EmpiricalCounts sample(const JointDistribution& d, std::uint64_t n, std::uint64_t seed);

struct MomentEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

struct MarginEstimate {
    double value = 0.0;
    double std_error = 0.0;
    double z_score = 0.0;
};

struct EstimatedReport {
    MomentEstimate mean_x;
    MomentEstimate mean_z;
    MomentEstimate corr_xz;
    MarginEstimate margin_upper;
    MarginEstimate margin_lower;
    Verdict verdict = Verdict::satisfied;
    bool verdict_confident = false;
    double confidence_sigmas = 5.0;
};

/// Plug-in moment estimates with standard errors sqrt((1-m^2)/N); margins in
/// compact form with delta-method errors from the full multinomial covariance
/// of (x, z, xz).  Covariances use half-count smoothed cell frequencies so a
/// degenerate small sample reports wide errors instead of zero ones.  At the
/// |.| kinks the larger of the two branch variances is reported; the
/// propagation is approximate when a margin argument sits near zero.
/// verdict_confident: the binding margin is at least confidence_sigmas
/// standard errors away from zero (and the verdict is not "boundary").
EstimatedReport estimate(const EmpiricalCounts& c, double gamma_x, double gamma_z,
                         double confidence_sigmas = 5.0);

}  // namespace complab
