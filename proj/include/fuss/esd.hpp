#pragma once

/**
 * @file esd.hpp
 * @brief Empirical spectral distributions and sup-norm distances.
 *
 * The empirical distribution function is right-continuous; against another
 * step function or a continuous reference, the supremum of the difference
 * is attained at sample points, approached from either side, so distances
 * are evaluated at every knot twice (value and left limit).
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fuss {

class EmpiricalCdf {
  public:
    explicit EmpiricalCdf(std::vector<double> values) : knots_(std::move(values)) {
        if (knots_.empty()) throw std::invalid_argument("EmpiricalCdf: no values");
        std::sort(knots_.begin(), knots_.end());
    }

    /// Pools the values of several samples into one distribution.
    static EmpiricalCdf pooled(const std::vector<std::vector<double>>& samples) {
        std::vector<double> all;
        for (const auto& s : samples) all.insert(all.end(), s.begin(), s.end());
        return EmpiricalCdf(std::move(all));
    }

    double operator()(double x) const {
        auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
        return static_cast<double>(it - knots_.begin()) / static_cast<double>(knots_.size());
    }

    double left_limit(double x) const {
        auto it = std::lower_bound(knots_.begin(), knots_.end(), x);
        return static_cast<double>(it - knots_.begin()) / static_cast<double>(knots_.size());
    }

    const std::vector<double>& knots() const { return knots_; }

  private:
    std::vector<double> knots_;
};

/// sup |F - G| for an empirical F against a (right-continuous, monotone)
/// reference G. Extra probe points can be supplied when G is only known
/// through numerics and monotonicity deserves a safety net.
inline double kolmogorov_distance(const EmpiricalCdf& f, const std::function<double(double)>& g,
                                  const std::vector<double>& probes = {}) {
    double worst = 0.0;
    for (double x : f.knots()) {
        const double gx = g(x);
        worst = std::max(worst, std::abs(f(x) - gx));
        worst = std::max(worst, std::abs(f.left_limit(x) - gx));
    }
    for (double x : probes) worst = std::max(worst, std::abs(f(x) - g(x)));
    return worst;
}

inline double kolmogorov_distance(const EmpiricalCdf& f, const EmpiricalCdf& g) {
    double worst = 0.0;
    auto probe = [&](double x) {
        worst = std::max(worst, std::abs(f(x) - g(x)));
        worst = std::max(worst, std::abs(f.left_limit(x) - g.left_limit(x)));
    };
    for (double x : f.knots()) probe(x);
    for (double x : g.knots()) probe(x);
    return worst;
}

}  // namespace fuss
