#pragma once

/**
 * @file polyroots.hpp
 * @brief All roots of a complex polynomial by simultaneous iteration.
 *
 * Weierstrass-style updates: every approximation moves by the ratio of the
 * polynomial value to the product of its distances from the other
 * approximations, so the set converges to the full root multiset at once.
 * Starting points sit on a circle at the Cauchy bound with an irrational
 * angular offset to dodge symmetric stalls.
 */

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fuss/errors.hpp"

namespace fuss {

inline std::complex<double> polynomial_value(const std::vector<std::complex<double>>& coeffs,
                                             std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

/// Roots of sum_k coeffs[k] z^k with coeffs.back() != 0, unordered.
inline std::vector<std::complex<double>> polynomial_roots(
    const std::vector<std::complex<double>>& coeffs, unsigned max_iter = 400,
    double tol = 1e-13) {
    if (coeffs.size() < 2) throw std::invalid_argument("polynomial_roots: need degree >= 1");
    const std::size_t deg = coeffs.size() - 1;
    const std::complex<double> lead = coeffs.back();
    if (std::abs(lead) == 0.0)
        throw std::invalid_argument("polynomial_roots: leading coefficient is zero");

    double bound = 0.0;
    for (std::size_t k = 0; k < deg; ++k) bound = std::max(bound, std::abs(coeffs[k] / lead));
    const double radius = 1.0 + bound;

    std::vector<std::complex<double>> roots(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        const double angle = 2.0 * M_PI * (static_cast<double>(k) + 0.3819660112501051) /
                             static_cast<double>(deg);
        roots[k] = std::polar(radius, angle);
    }

    for (unsigned iter = 0; iter < max_iter; ++iter) {
        double worst = 0.0;
        for (std::size_t k = 0; k < deg; ++k) {
            std::complex<double> denom = lead;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) denom *= roots[k] - roots[j];
            if (std::abs(denom) == 0.0) {  // collided approximations: nudge apart
                roots[k] += radius * 1e-8;
                worst = radius;
                continue;
            }
            const std::complex<double> step = polynomial_value(coeffs, roots[k]) / denom;
            roots[k] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(roots[k])));
        }
        if (worst <= tol) return roots;
    }
    throw no_convergence("polynomial_roots: simultaneous iteration did not settle");
}

}  // namespace fuss
