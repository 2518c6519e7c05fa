// Shared helpers for the test suites: seeded generators for states, unit
// vectors, admissible measurement models, and random 4-outcome tables.
#pragma once

#include <array>
#include <cmath>
#include <random>

#include "complab/measurement.hpp"
#include "complab/qubit.hpp"

namespace complab::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec3 random_unit_vec(std::mt19937_64& rng) {
    for (;;) {
        const Vec3 v{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0),
                     uniform(rng, -1.0, 1.0)};
        const double len = v.norm();
        if (len > 1e-3 && len <= 1.0) {
            return {v.x / len, v.y / len, v.z / len};
        }
    }
}

inline Direction random_direction(std::mt19937_64& rng) {
    return Direction::normalized(random_unit_vec(rng));
}

/// Uniform in the closed unit ball.
inline BlochState random_state(std::mt19937_64& rng) {
    const Vec3 dir = random_unit_vec(rng);
    const double r = std::cbrt(uniform(rng, 0.0, 1.0));
    return BlochState{dir * r};
}

/// Admissible model with arbitrary correlation direction (rejection sampled).
inline MeasurementModel random_admissible_model(std::mt19937_64& rng,
                                                double gamma_floor = 0.05) {
    for (;;) {
        const MeasurementModel m{uniform(rng, gamma_floor, 1.0),
                                 uniform(rng, gamma_floor, 1.0),
                                 uniform(rng, 0.0, 1.0), random_direction(rng)};
        if (povm_positivity(m).admissible) return m;
    }
}

/// Admissible model with n = e_y: gammas inside the unit ball.
inline MeasurementModel random_admissible_model_ey(std::mt19937_64& rng,
                                                   double gamma_floor = 0.05) {
    for (;;) {
        const double gx = uniform(rng, gamma_floor, 1.0);
        const double gz = uniform(rng, gamma_floor, 1.0);
        const double gxz = uniform(rng, 0.0, 1.0);
        if (gx * gx + gz * gz + gxz * gxz <= 1.0) {
            return MeasurementModel{gx, gz, gxz, Direction::y_axis()};
        }
    }
}

/// Strictly positive random probability table over the four outcomes.
inline JointDistribution random_distribution(std::mt19937_64& rng) {
    std::array<double, 4> p{};
    double sum = 0.0;
    for (auto& v : p) {
        v = -std::log(uniform(rng, 1e-12, 1.0));
        sum += v;
    }
    for (auto& v : p) v /= sum;
    // renormalize exactly enough for the constructor's 1e-12 gate
    double s2 = p[0] + p[1] + p[2] + p[3];
    p[3] += 1.0 - s2;
    return JointDistribution{p};
}

}  // namespace complab::testing
