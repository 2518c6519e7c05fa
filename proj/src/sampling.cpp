#include "complab/sampling.hpp"

#include <cmath>
#include <random>

namespace complab {

namespace {

double draw_unit(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

struct Covariance {
    double var_x, var_z, var_xz;
    double cov_x_z, cov_x_xz, cov_z_xz;
};

// First-order variance of m = f(mean_x, mean_z, corr_xz) from gradient g.
double propagate(const Covariance& c, double gx, double gz, double gxz,
                 std::uint64_t n) {
    const double quad = gx * gx * c.var_x + gz * gz * c.var_z + gxz * gxz * c.var_xz +
                        2.0 * (gx * gz * c.cov_x_z + gx * gxz * c.cov_x_xz +
                               gz * gxz * c.cov_z_xz);
    return std::max(quad, 0.0) / static_cast<double>(n);
}

}  // namespace

EmpiricalCounts sample(const JointDistribution& d, std::uint64_t n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("sample: need at least one draw");
    }
    // JointDistribution already guarantees entries >= -1e-12; clamp the
    // rounding dust so the cumulative walk sees a genuine distribution.
    std::array<double, 4> cdf{};
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        acc += std::max(d.table()[i], 0.0);
        cdf[i] = acc;
    }

    EmpiricalCounts out;
    out.total = n;
    out.seed = seed;
    std::mt19937_64 eng(seed);
    for (std::uint64_t k = 0; k < n; ++k) {
        const double u = draw_unit(eng) * acc;
        std::size_t idx = 3;
        for (std::size_t i = 0; i < 4; ++i) {
            if (u < cdf[i]) {
                idx = i;
                break;
            }
        }
        ++out.counts[idx];
    }
    return out;
}

EstimatedReport estimate(const EmpiricalCounts& c, double gamma_x, double gamma_z,
                         double confidence_sigmas) {
    if (c.total < 2) {
        throw std::invalid_argument("estimate: need at least two samples");
    }
    if (!(gamma_x > 0.0) || gamma_x > 1.0 || !(gamma_z > 0.0) || gamma_z > 1.0) {
        throw std::invalid_argument("estimate: gammas must lie in (0,1]");
    }
    std::uint64_t counted = 0;
    for (auto v : c.counts) counted += v;
    if (counted != c.total) {
        throw std::invalid_argument("estimate: counts do not sum to total");
    }

    const double n = static_cast<double>(c.total);
    MomentTriple m;
    MomentTriple smooth;  // half-count smoothing, used for uncertainties only
    for (std::size_t i = 0; i < 4; ++i) {
        const double x = outcome_order[i][0];
        const double z = outcome_order[i][1];
        const double p = static_cast<double>(c.counts[i]) / n;
        const double q = (static_cast<double>(c.counts[i]) + 0.5) / (n + 2.0);
        m.mean_x += x * p;
        m.mean_z += z * p;
        m.corr_xz += x * z * p;
        smooth.mean_x += x * q;
        smooth.mean_z += z * q;
        smooth.corr_xz += x * z * q;
    }

    Covariance cov;
    cov.var_x = 1.0 - smooth.mean_x * smooth.mean_x;
    cov.var_z = 1.0 - smooth.mean_z * smooth.mean_z;
    cov.var_xz = 1.0 - smooth.corr_xz * smooth.corr_xz;
    cov.cov_x_z = smooth.corr_xz - smooth.mean_x * smooth.mean_z;
    cov.cov_x_xz = smooth.mean_z - smooth.mean_x * smooth.corr_xz;
    cov.cov_z_xz = smooth.mean_x - smooth.mean_z * smooth.corr_xz;

    EstimatedReport r;
    r.confidence_sigmas = confidence_sigmas;
    r.mean_x = {m.mean_x, std::sqrt(cov.var_x / n)};
    r.mean_z = {m.mean_z, std::sqrt(cov.var_z / n)};
    r.corr_xz = {m.corr_xz, std::sqrt(cov.var_xz / n)};

    const double a = m.mean_x / gamma_x;
    const double b = m.mean_z / gamma_z;
    const double cc = m.corr_xz / (gamma_x * gamma_z);
    const double inv_x = 1.0 / gamma_x;
    const double inv_z = 1.0 / gamma_z;
    const double inv_xz = 1.0 / (gamma_x * gamma_z);

    // margin_upper = 1 - |a - b| - c: gradient (-s/gx, +s/gz, -1/(gx gz)).
    const double diff = a - b;
    double var_upper;
    if (diff == 0.0) {
        var_upper = std::max(
            propagate(cov, -inv_x, +inv_z, -inv_xz, c.total),
            propagate(cov, +inv_x, -inv_z, -inv_xz, c.total));
    } else {
        const double sgn = diff > 0.0 ? 1.0 : -1.0;
        var_upper = propagate(cov, -sgn * inv_x, +sgn * inv_z, -inv_xz, c.total);
    }

    // margin_lower = 1 + c - |a + b|: gradient (-t/gx, -t/gz, +1/(gx gz)).
    const double tot = a + b;
    double var_lower;
    if (tot == 0.0) {
        var_lower = std::max(
            propagate(cov, -inv_x, -inv_z, +inv_xz, c.total),
            propagate(cov, +inv_x, +inv_z, +inv_xz, c.total));
    } else {
        const double sgn = tot > 0.0 ? 1.0 : -1.0;
        var_lower = propagate(cov, -sgn * inv_x, -sgn * inv_z, +inv_xz, c.total);
    }

    r.margin_upper.value = 1.0 - std::abs(diff) - cc;
    r.margin_upper.std_error = std::sqrt(var_upper);
    r.margin_lower.value = 1.0 + cc - std::abs(tot);
    r.margin_lower.std_error = std::sqrt(var_lower);

    r.margin_upper.z_score = r.margin_upper.value / r.margin_upper.std_error;
    r.margin_lower.z_score = r.margin_lower.value / r.margin_lower.std_error;

    const bool upper_binds = r.margin_upper.value <= r.margin_lower.value;
    const MarginEstimate& binding = upper_binds ? r.margin_upper : r.margin_lower;
    r.verdict = classify_margin(binding.value);
    r.verdict_confident =
        r.verdict != Verdict::boundary && std::abs(binding.z_score) >= confidence_sigmas;
    return r;
}

}  // namespace complab
