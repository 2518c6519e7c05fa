#include "complab/classical.hpp"

#include <algorithm>
#include <cmath>

namespace complab {

namespace {

void require_invertible_gamma(double g, const char* name) {
    if (!(g > 0.0) || g > 1.0 || !std::isfinite(g)) {
        throw std::invalid_argument(std::string("insufficient information to invert: ") +
                                    name + " must lie in (0,1]");
    }
}

void require_outcome(int v) {
    if (v != 1 && v != -1) {
        throw std::invalid_argument("outcome labels must be +1 or -1");
    }
}

std::array<double, 4> family_from_ratios(double a, double b, double c) {
    return {1.0 + a + b + c, 1.0 - a - b + c, 1.0 - a + b - c, 1.0 + a - b - c};
}

InequalityReport report_from_ratios(double a, double b, double c, double tol) {
    InequalityReport r;
    r.four_values = family_from_ratios(a, b, c);
    r.margin_upper = 1.0 - std::abs(a - b) - c;
    r.margin_lower = 1.0 + c - std::abs(a + b);
    r.verdict = classify_margin(std::min(r.margin_upper, r.margin_lower), tol);
    return r;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::boundary: return "boundary";
        case Verdict::violated: return "violated";
    }
    return "unknown";
}

Verdict classify_margin(double worst_margin, double tol) {
    if (std::abs(worst_margin) <= tol) return Verdict::boundary;
    return worst_margin < 0.0 ? Verdict::violated : Verdict::satisfied;
}

ReconstructedDistribution::ReconstructedDistribution(const std::array<double, 4>& p)
    : p_(p) {
    double sum = 0.0;
    for (double v : p_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(
                "ReconstructedDistribution: entries must be finite");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument(
            "ReconstructedDistribution: entries do not sum to 1");
    }
}

double ReconstructedDistribution::min_entry() const {
    return *std::min_element(p_.begin(), p_.end());
}

double conditional_x(int x, int x_prime, double gamma_x) {
    require_outcome(x);
    require_outcome(x_prime);
    if (!(gamma_x > 0.0) || gamma_x > 1.0) {
        throw std::invalid_argument("conditional_x: gamma out of range (0,1]");
    }
    return 0.5 * (1.0 + gamma_x * x * x_prime);
}

double conditional_z(int z, int z_prime, double gamma_z) {
    require_outcome(z);
    require_outcome(z_prime);
    if (!(gamma_z > 0.0) || gamma_z > 1.0) {
        throw std::invalid_argument("conditional_z: gamma out of range (0,1]");
    }
    return 0.5 * (1.0 + gamma_z * z * z_prime);
}

ReconstructedDistribution reconstruct_p_lambda(const MomentTriple& t, double gamma_x,
                                               double gamma_z) {
    require_invertible_gamma(gamma_x, "gamma_x");
    require_invertible_gamma(gamma_z, "gamma_z");
    const double a = t.mean_x / gamma_x;
    const double b = t.mean_z / gamma_z;
    const double c = t.corr_xz / (gamma_x * gamma_z);

    std::array<double, 4> p{};
    for (std::size_t i = 0; i < 4; ++i) {
        const double xp = outcome_order[i][0];
        const double zp = outcome_order[i][1];
        p[i] = 0.25 * (1.0 + a * xp + b * zp + c * xp * zp);
    }
    return ReconstructedDistribution(p);
}

JointDistribution forward_model(const ReconstructedDistribution& p_lambda,
                                double gamma_x, double gamma_z) {
    std::array<double, 4> p{};
    for (std::size_t i = 0; i < 4; ++i) {
        const int x = outcome_order[i][0];
        const int z = outcome_order[i][1];
        double acc = 0.0;
        for (const auto& lambda : outcome_order) {
            acc += conditional_x(x, lambda[0], gamma_x) *
                   conditional_z(z, lambda[1], gamma_z) *
                   p_lambda.at(lambda[0], lambda[1]);
        }
        p[i] = acc;
    }
    return JointDistribution(p);
}

std::array<double, 4> inequality_family(const MomentTriple& t, double gamma_x,
                                        double gamma_z) {
    require_invertible_gamma(gamma_x, "gamma_x");
    require_invertible_gamma(gamma_z, "gamma_z");
    return family_from_ratios(t.mean_x / gamma_x, t.mean_z / gamma_z,
                              t.corr_xz / (gamma_x * gamma_z));
}

InequalityReport compact_inequality(const MomentTriple& t, double gamma_x,
                                    double gamma_z, double tol) {
    require_invertible_gamma(gamma_x, "gamma_x");
    require_invertible_gamma(gamma_z, "gamma_z");
    return report_from_ratios(t.mean_x / gamma_x, t.mean_z / gamma_z,
                              t.corr_xz / (gamma_x * gamma_z), tol);
}

InequalityReport state_form_inequality(const BlochState& s, const MeasurementModel& m,
                                       double tol) {
    require_invertible_gamma(m.gamma_x(), "gamma_x");
    require_invertible_gamma(m.gamma_z(), "gamma_z");
    const double a = s.vec().dot(m.axis_x().vec());
    const double b = s.vec().dot(m.axis_z().vec());
    const double c =
        m.gamma_xz() * s.vec().dot(m.n().vec()) / (m.gamma_x() * m.gamma_z());
    return report_from_ratios(a, b, c, tol);
}

double mu_kernel(int w, int w_prime, double gamma_w) {
    require_outcome(w);
    require_outcome(w_prime);
    if (!(gamma_w > 0.0) || gamma_w > 1.0 || !std::isfinite(gamma_w)) {
        throw std::invalid_argument(
            "mu_kernel: gamma must lie in (0,1]; inversion impossible otherwise");
    }
    return 0.5 * (1.0 + static_cast<double>(w) * static_cast<double>(w_prime) / gamma_w);
}

ReconstructedDistribution invert_joint(const JointDistribution& d, double gamma_x,
                                       double gamma_z) {
    require_invertible_gamma(gamma_x, "gamma_x");
    require_invertible_gamma(gamma_z, "gamma_z");

    std::array<double, 4> p{};
    for (std::size_t i = 0; i < 4; ++i) {
        const int x = outcome_order[i][0];
        const int z = outcome_order[i][1];
        double acc = 0.0;
        for (const auto& obs : outcome_order) {
            acc += mu_kernel(x, obs[0], gamma_x) * mu_kernel(z, obs[1], gamma_z) *
                   d.at(obs[0], obs[1]);
        }
        p[i] = acc;
    }
    return ReconstructedDistribution(p);
}

EquivalenceReport equivalence_check(const JointDistribution& d, double gamma_x,
                                    double gamma_z) {
    const ReconstructedDistribution inverted = invert_joint(d, gamma_x, gamma_z);
    const ReconstructedDistribution reconstructed =
        reconstruct_p_lambda(moments(d), gamma_x, gamma_z);

    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst,
                         std::abs(inverted.table()[i] - reconstructed.table()[i]));
    }
    return {worst};
}

MeasurementModel violation_search(const BlochState& s) {
    const double len = s.norm();
    if (len < 1e-12) {
        throw std::invalid_argument(
            "violation_search: identity state, no violating measurement exists");
    }

    // g^2/sqrt(1-2g^2) = |s|/2  <=>  g^4 + (|s|^2/2) g^2 - |s|^2/4 = 0.
    const double s2 = len * len;
    const double g2 = 0.5 * (-0.5 * s2 + std::sqrt(0.25 * s2 * s2 + s2));
    const double g = std::sqrt(g2);
    const double gamma_xz = std::sqrt(1.0 - 2.0 * g2);

    const Direction n = Direction::normalized(s.vec());
    const auto [axis_x, axis_z] = orthonormal_complement(n);
    return MeasurementModel(g, g, gamma_xz, n, axis_x, axis_z);
}

}  // namespace complab
