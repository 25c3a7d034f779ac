#pragma once

/**
 * @file limit_law.hpp
 * @brief The limiting spectral law of normalized products: transform,
 *        density, distribution function, and moments.
 *
 * The resolvent-side object w(z) = -z s(z) solves u w^{m+1} - w + 1 = 0 at
 * u = 1/z and matches the moment generating function near u = 0, so the
 * physical branch is the one with w -> 1 far from the support. Values
 * anywhere in the upper half plane come from root tracking: all m+1
 * candidate roots are computed and the branch follows the nearest one along
 * a path from far away, with midpoint insertion whenever two candidates get
 * close enough to confuse the pick.
 *
 * The density on the support is recovered from Im s just above the axis on
 * a three-rung ladder of heights, extrapolated linearly to height zero from
 * the two smallest rungs; rung heights shrink proportionally below x = 0.01
 * where the density profile steepens. Integrals use two substitutions that
 * flatten both endpoint singularities: x = x_c t^{m+1} absorbs the x^{-m/(m+1)}
 * blowup at zero, and x = edge - (edge - x_c) r^2 absorbs the square-root
 * vanishing at the edge.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "fuss/errors.hpp"
#include "fuss/polyroots.hpp"

namespace fuss {

inline double support_edge(unsigned m) {
    if (m < 1) throw std::invalid_argument("support_edge: m must be >= 1");
    const double mm = static_cast<double>(m);
    return std::pow(mm + 1.0, mm + 1.0) / std::pow(mm, mm);
}

/// Closed-form density of the m = 1 law on (0, 4).
inline double mp_density(double x) {
    if (x <= 0.0 || x >= 4.0) return 0.0;
    return std::sqrt(x * (4.0 - x)) / (2.0 * M_PI * x);
}

namespace detail {

inline std::vector<std::complex<double>> branch_candidates(unsigned m, std::complex<double> u) {
    std::vector<std::complex<double>> c(m + 2, 0.0);
    c[0] = 1.0;
    c[1] = -1.0;
    c[m + 1] = u;
    // near-critical u puts two roots ~sqrt(|u - u*|) apart, where evaluation
    // noise floors the iteration around 1e-12; the loose stop still leaves
    // the roots far more accurate than branch tracking needs
    return polynomial_roots(c, 400, 1e-11);
}

inline std::complex<double> nearest_root(const std::vector<std::complex<double>>& roots,
                                         std::complex<double> target, bool& confident) {
    std::size_t best = 0;
    double d1 = std::abs(roots[0] - target), d2 = HUGE_VAL;
    for (std::size_t k = 1; k < roots.size(); ++k) {
        const double d = std::abs(roots[k] - target);
        if (d < d1) {
            d2 = d1;
            d1 = d;
            best = k;
        } else {
            d2 = std::min(d2, d);
        }
    }
    confident = d1 <= 0.45 * d2;
    return roots[best];
}

/// Track the w-branch from z_from (value w_start) to z_to, splitting the
/// segment while the nearest-root pick lacks a clear margin.
inline std::complex<double> continue_segment(unsigned m, std::complex<double> w_start,
                                             std::complex<double> z_from,
                                             std::complex<double> z_to, int depth = 0) {
    bool confident = false;
    auto w = nearest_root(branch_candidates(m, 1.0 / z_to), w_start, confident);
    if (confident || depth >= 48) return w;
    const auto z_mid = 0.5 * (z_from + z_to);
    const auto w_mid = continue_segment(m, w_start, z_from, z_mid, depth + 1);
    return continue_segment(m, w_mid, z_mid, z_to, depth + 1);
}

inline std::complex<double> branch_far_out(unsigned m, std::complex<double> z_far) {
    bool confident = false;
    auto w = nearest_root(branch_candidates(m, 1.0 / z_far), 1.0, confident);
    if (!confident)
        throw branch_ambiguity("branch_far_out: no separated root near 1 far from the support");
    return w;
}

}  // namespace detail

/// s(z) = integral of 1/(x - z) against the law, for Im z > 0.
inline std::complex<double> stieltjes_transform(unsigned m, std::complex<double> z) {
    if (m < 1) throw std::invalid_argument("stieltjes_transform: m must be >= 1");
    if (!(z.imag() > 0.0)) throw std::invalid_argument("stieltjes_transform: need Im z > 0");
    const double far = std::max(4.0, 64.0 * support_edge(m) / std::abs(z));
    std::complex<double> w = detail::branch_far_out(m, far * z);
    double t = far;
    while (t > 1.0) {
        const double t_next = std::max(1.0, 0.7 * t);
        w = detail::continue_segment(m, w, t * z, t_next * z);
        t = t_next;
    }
    const std::complex<double> s = -w / z;
    if (s.imag() < -1e-9 * std::abs(s))
        throw branch_ambiguity("stieltjes_transform: continuation left the upper half plane");
    return s;
}

/// Branch tracker for batch evaluation at fixed height: starts at twice the
/// support edge and accepts queries at non-increasing real parts.
class StieltjesSweep {
  public:
    StieltjesSweep(unsigned m, double eps)
        : m_(m), eps_(eps), x_(2.0 * support_edge(m)) {
        w_ = -stieltjes_transform(m, {x_, eps}) * std::complex<double>(x_, eps);
    }

    std::complex<double> transform_at(double x) {
        if (x > x_ + 1e-12)
            throw std::logic_error("StieltjesSweep: queries must move leftward");
        const std::complex<double> z(x, eps_);
        w_ = detail::continue_segment(m_, w_, {x_, eps_}, z);
        x_ = x;
        const std::complex<double> s = -w_ / z;
        if (s.imag() < -1e-9 * std::abs(s))
            throw branch_ambiguity("StieltjesSweep: continuation left the upper half plane");
        return s;
    }

  private:
    unsigned m_;
    double eps_, x_;
    std::complex<double> w_;
};

inline constexpr double density_rungs[3] = {1e-4, 1e-5, 1e-6};

struct DensityEvaluation {
    double rung_values[3] = {0.0, 0.0, 0.0};  // Im s / pi at the ladder heights
    double value = 0.0;                       // extrapolation to height zero
};

inline DensityEvaluation limit_density_detailed(unsigned m, double x) {
    DensityEvaluation out;
    if (x <= 0.0 || x >= support_edge(m)) return out;
    const double scale = std::min(1.0, x / 0.01);
    for (int k = 0; k < 3; ++k)
        out.rung_values[k] =
            stieltjes_transform(m, {x, density_rungs[k] * scale}).imag() / M_PI;
    const double e1 = density_rungs[1] * scale, e2 = density_rungs[2] * scale;
    out.value = std::max(0.0, (out.rung_values[2] * e1 - out.rung_values[1] * e2) / (e1 - e2));
    return out;
}

inline double limit_density(unsigned m, double x) { return limit_density_detailed(m, x).value; }

/// Densities for many points at once: points at x >= 0.01 share three
/// leftward sweeps (one per rung); smaller x fall back to pointwise
/// evaluation with scaled rungs.
inline std::vector<double> limit_density_batch(unsigned m, const std::vector<double>& xs) {
    const double edge = support_edge(m);
    std::vector<double> out(xs.size(), 0.0);
    std::vector<std::size_t> sweepable;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0.0 || xs[i] >= edge) continue;
        if (xs[i] >= 0.01)
            sweepable.push_back(i);
        else
            out[i] = limit_density(m, xs[i]);
    }
    std::sort(sweepable.begin(), sweepable.end(),
              [&](std::size_t a, std::size_t b) { return xs[a] > xs[b]; });
    if (sweepable.empty()) return out;
    std::vector<std::vector<double>> rung(3, std::vector<double>(sweepable.size()));
    for (int k = 0; k < 3; ++k) {
        StieltjesSweep sweep(m, density_rungs[k]);
        for (std::size_t idx = 0; idx < sweepable.size(); ++idx)
            rung[k][idx] = sweep.transform_at(xs[sweepable[idx]]).imag() / M_PI;
    }
    const double e1 = density_rungs[1], e2 = density_rungs[2];
    for (std::size_t idx = 0; idx < sweepable.size(); ++idx)
        out[sweepable[idx]] =
            std::max(0.0, (rung[2][idx] * e1 - rung[1][idx] * e2) / (e1 - e2));
    return out;
}

/// Tabulated law: density sampled on the two substitution grids, integrated
/// once, then queried for distribution values and moments.
class LimitLaw {
  public:
    explicit LimitLaw(unsigned m, unsigned panels = 2048)
        : m_(m), edge_(support_edge(m)), xc_(edge_ / 4.0),
          panels_(panels % 2 ? panels + 1 : panels) {  // composite rule needs even
        if (panels < 8) throw std::invalid_argument("LimitLaw: too few panels");
        build_tables();
    }

    unsigned order() const { return m_; }
    double edge() const { return edge_; }

    double density(double x) const { return limit_density(m_, x); }

    /// Integral of the tabulated density over the whole support; the gap
    /// from 1 measures the accumulated numerical error.
    double normalization() const { return total_; }

    double cdf(double x) const {
        if (x <= 0.0) return 0.0;
        if (x >= edge_) return std::min(1.0, total_);
        double raw;
        if (x <= xc_) {
            raw = interpolate(cum1_, std::pow(x / xc_, 1.0 / (m_ + 1.0)));
        } else {
            const double r = std::sqrt((edge_ - x) / (edge_ - xc_));
            raw = cum1_.back() + cum2_.back() - interpolate(cum2_, r);
        }
        return std::clamp(raw, 0.0, 1.0);
    }

    /// p-th moment of the tabulated law.
    double moment(unsigned p) const {
        auto weighted = [&](const std::vector<double>& g, const std::vector<double>& x) {
            std::vector<double> gx(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) gx[i] = g[i] * std::pow(x[i], p);
            return simpson(gx);
        };
        return weighted(g1_, x1_) + weighted(g2_, x2_);
    }

  private:
    void build_tables() {
        const double h = 1.0 / panels_;
        const unsigned nodes = panels_ + 1;
        x1_.resize(nodes);
        x2_.resize(nodes);
        for (unsigned i = 0; i < nodes; ++i) {
            const double t = i * h;
            x1_[i] = xc_ * std::pow(t, m_ + 1.0);
            x2_[i] = edge_ - (edge_ - xc_) * t * t;
        }
        std::vector<double> all(x1_);
        all.insert(all.end(), x2_.begin(), x2_.end());
        auto rho = limit_density_batch(m_, all);

        g1_.resize(nodes);
        g2_.resize(nodes);
        for (unsigned i = 0; i < nodes; ++i) {
            const double t = i * h;
            g1_[i] = rho[i] * xc_ * (m_ + 1.0) * std::pow(t, static_cast<double>(m_));
            g2_[i] = rho[nodes + i] * 2.0 * (edge_ - xc_) * t;
        }
        // t = 0 limit of the first integrand: extract the small-x level
        // rho(x) ~ c x^{-m/(m+1)} at a tiny probe point.
        const double probe_t = 1e-4;
        const double probe_x = xc_ * std::pow(probe_t, m_ + 1.0);
        const double level = limit_density(m_, probe_x) *
                             std::pow(probe_x, m_ / (m_ + 1.0));
        g1_[0] = (m_ + 1.0) * std::pow(xc_, 1.0 / (m_ + 1.0)) * level;

        cum1_ = cumulative(g1_, h);
        cum2_ = cumulative(g2_, h);
        for (auto* c : {&cum1_, &cum2_})  // harden monotonicity against roundoff
            for (std::size_t i = 1; i < c->size(); ++i)
                (*c)[i] = std::max((*c)[i], (*c)[i - 1]);
        total_ = cum1_.back() + cum2_.back();
    }

    /// Prefix integrals on a uniform grid via the three-point closed rule;
    /// O(h^4) locally, O(h^3) accumulated.
    static std::vector<double> cumulative(const std::vector<double>& f, double h) {
        const std::size_t n = f.size();
        std::vector<double> cum(n, 0.0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (i + 2 < n)
                cum[i + 1] = cum[i] + h / 12.0 * (5.0 * f[i] + 8.0 * f[i + 1] - f[i + 2]);
            else
                cum[i + 1] = cum[i] + h / 12.0 * (-f[i - 1] + 8.0 * f[i] + 5.0 * f[i + 1]);
        }
        return cum;
    }

    double simpson(const std::vector<double>& f) const {
        const double h = 1.0 / panels_;
        double acc = f.front() + f.back();
        for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f[i] * (i % 2 ? 4.0 : 2.0);
        return acc * h / 3.0;
    }

    /// Linear interpolation of a cumulative table against its unit grid.
    double interpolate(const std::vector<double>& cum, double t) const {
        const double pos = std::clamp(t, 0.0, 1.0) * panels_;
        const std::size_t i = std::min(static_cast<std::size_t>(pos), cum.size() - 2);
        const double frac = pos - static_cast<double>(i);
        return cum[i] + frac * (cum[i + 1] - cum[i]);
    }

    unsigned m_;
    double edge_, xc_;
    unsigned panels_;
    double total_ = 0.0;
    std::vector<double> x1_, x2_, g1_, g2_, cum1_, cum2_;
};

}  // namespace fuss
