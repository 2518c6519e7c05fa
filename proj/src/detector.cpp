#include "complab/detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel.hpp"

namespace complab {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kEntryTol = 1e-12;

void check_triple(const GammaTriple& g, bool require_positive_xz_pair) {
    const auto bad = [](double v) { return !std::isfinite(v) || v < 0.0 || v > 1.0; };
    if (bad(g.x) || bad(g.z) || bad(g.xz)) {
        throw std::invalid_argument("GammaTriple: values must lie in [0,1]");
    }
    if (require_positive_xz_pair && (!(g.x > 0.0) || !(g.z > 0.0))) {
        throw std::invalid_argument(
            "inverted_kernel: gamma_x and gamma_z must be positive");
    }
}

double table_min(const std::array<std::array<double, 4>, 4>& q) {
    double worst = q[0][0];
    for (const auto& row : q) {
        worst = std::min(worst, *std::min_element(row.begin(), row.end()));
    }
    return worst;
}

}  // namespace

Vec3 coherent_direction(int x_prime, int z_prime) {
    outcome_index(x_prime, z_prime);  // validates labels
    const double inv = 1.0 / kSqrt3;
    return {x_prime * inv, x_prime * z_prime * inv, z_prime * inv};
}

QLikeDistribution::QLikeDistribution(const BlochState& s) {
    for (std::size_t i = 0; i < 4; ++i) {
        const int xp = outcome_order[i][0];
        const int zp = outcome_order[i][1];
        p_[i] = 0.25 * (1.0 + s.vec().dot(coherent_direction(xp, zp)));
    }
}

QLikeDistribution q_like_distribution(const BlochState& s) {
    return QLikeDistribution(s);
}

DetectorKernel::DetectorKernel(const GammaTriple& g) : g_(g) {
    check_triple(g, false);
    for (std::size_t r = 0; r < 4; ++r) {
        const double x = outcome_order[r][0];
        const double z = outcome_order[r][1];
        for (std::size_t c = 0; c < 4; ++c) {
            const double xp = outcome_order[c][0];
            const double zp = outcome_order[c][1];
            q_[r][c] = 0.25 * (1.0 + kSqrt3 * (g.x * x * xp + g.z * z * zp +
                                               g.xz * x * z * xp * zp));
        }
    }
}

double DetectorKernel::min_entry() const { return table_min(q_); }

std::array<double, 4> DetectorKernel::apply(const QLikeDistribution& p_lambda) const {
    std::array<double, 4> out{};
    for (std::size_t r = 0; r < 4; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < 4; ++c) {
            acc += q_[r][c] * p_lambda.table()[c];
        }
        out[r] = acc;
    }
    return out;
}

DetectorKernel detector_kernel(const GammaTriple& g) { return DetectorKernel(g); }

KernelPositivityReport kernel_positivity(const GammaTriple& g) {
    check_triple(g, false);
    KernelPositivityReport r;
    r.min_entry = DetectorKernel(g).min_entry();
    r.positive = r.min_entry >= -kEntryTol;
    r.upper_slack = 1.0 - kSqrt3 * std::abs(g.x - g.z) - kSqrt3 * g.xz;
    r.lower_slack = kSqrt3 * g.xz - (kSqrt3 * (g.x + g.z) - 1.0);
    // table entries are slack/4, so the closed form uses the matching scale
    r.closed_form = std::min(r.upper_slack, r.lower_slack) >= -4.0 * kEntryTol;
    return r;
}

FactorizationReport kernel_factorization(const GammaTriple& g) {
    check_triple(g, false);
    FactorizationReport r;
    r.defect = std::abs(g.xz - kSqrt3 * g.x * g.z);
    r.factorizes = r.defect <= 1e-12;
    return r;
}

double factor_kernel(int w, int w_prime, double gamma) {
    outcome_index(w, w_prime);  // validates labels
    return 0.5 * (1.0 + kSqrt3 * gamma * w * w_prime);
}

bool factorized_positivity(const GammaTriple& g) {
    if (!kernel_factorization(g).factorizes) {
        throw std::invalid_argument(
            "factorized_positivity: called on non-factorizing gammas");
    }
    double worst = std::numeric_limits<double>::infinity();
    for (int w : {+1, -1}) {
        for (int wp : {+1, -1}) {
            worst = std::min({worst, factor_kernel(w, wp, g.x), factor_kernel(w, wp, g.z)});
        }
    }
    return worst >= -kEntryTol;
}

RegionScan povm_factorized_region(int grid_resolution, int jobs) {
    if (grid_resolution < 2) {
        throw std::invalid_argument("povm_factorized_region: resolution must be >= 2");
    }
    const std::size_t res = static_cast<std::size_t>(grid_resolution);
    const double step = 1.0 / static_cast<double>(grid_resolution - 1);
    const double square_edge = 1.0 / kSqrt3;

    RegionScan scan;
    scan.grid.resize(res * res);
    parallel_for(res, jobs, [&](std::size_t i) {
        const double gx = static_cast<double>(i) * step;
        for (std::size_t j = 0; j < res; ++j) {
            const double gz = static_cast<double>(j) * step;
            RegionPoint& pt = scan.grid[i * res + j];
            pt.gamma_x = gx;
            pt.gamma_z = gz;
            pt.in_povm_region =
                gx * gx + gz * gz + 3.0 * gx * gx * gz * gz <= 1.0 + kEntryTol;
            pt.in_positive_square =
                gx <= square_edge + kEntryTol && gz <= square_edge + kEntryTol;
        }
    });

    scan.boundary.reserve(res);
    for (std::size_t i = 0; i < res; ++i) {
        const double gx = static_cast<double>(i) * step;
        const double gz = std::sqrt((1.0 - gx * gx) / (1.0 + 3.0 * gx * gx));
        scan.boundary.push_back({gx, gz});
    }
    return scan;
}

InvertedKernel inverted_kernel(const GammaTriple& g) {
    check_triple(g, true);
    InvertedKernel k;
    const double ratio = g.xz / (g.x * g.z);
    k.sqrt3_ratio = kSqrt3 * ratio;
    k.upper_allowed = 1.0;
    k.lower_required = 2.0 * kSqrt3 - 1.0;
    k.interval_empty = k.lower_required > k.upper_allowed;
    k.ratio_within_bounds = k.sqrt3_ratio <= k.upper_allowed + kEntryTol &&
                            k.sqrt3_ratio >= k.lower_required - kEntryTol;

    for (std::size_t r = 0; r < 4; ++r) {
        const double x = outcome_order[r][0];
        const double z = outcome_order[r][1];
        for (std::size_t c = 0; c < 4; ++c) {
            const double xp = outcome_order[c][0];
            const double zp = outcome_order[c][1];
            k.q[r][c] = 0.25 * (1.0 + kSqrt3 * (x * xp + z * zp +
                                                ratio * x * z * xp * zp));
        }
    }
    k.min_entry = table_min(k.q);
    return k;
}

}  // namespace complab
