#pragma once

#include <cmath>
#include <random>

#include "laxlab/fields.hpp"

namespace laxlab::testing {

inline GridSpec small_grid(int nx = 21, int nt = 17) {
    return GridSpec{-2.0, 2.0, 0.0, 1.0, nx, nt};
}

/// Smooth random-ish fields built from a few sinusoids with seeded
/// coefficients; deterministic per seed.
inline ScalarField smooth_field(const GridSpec& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const double a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng), e = coef(rng);
    auto f = [=](double x, double t) {
        return a + b * std::sin(x + c * t) + d * std::cos(e * x - t);
    };
    auto fx = [=](double x, double t) {
        return b * std::cos(x + c * t) - d * e * std::sin(e * x - t);
    };
    auto ft = [=](double x, double t) {
        return b * c * std::cos(x + c * t) + d * std::sin(e * x - t);
    };
    return ScalarField(g, f, fx, ft);
}

inline std::pair<CoefficientSet, SecondFormCoeffs> random_scenario(const GridSpec& g,
                                                                   unsigned seed) {
    CoefficientSet c{smooth_field(g, seed),     smooth_field(g, seed + 1),
                     smooth_field(g, seed + 2), smooth_field(g, seed + 3),
                     smooth_field(g, seed + 4), smooth_field(g, seed + 5)};
    SecondFormCoeffs s{smooth_field(g, seed + 6), smooth_field(g, seed + 7),
                       smooth_field(g, seed + 8)};
    return {std::move(c), std::move(s)};
}

}  // namespace laxlab::testing
