#pragma once

/**
 * @file truncation.hpp
 * @brief Entry truncation, its rank footprint, and tail fourth moments.
 *
 * Zeroing the entries above a threshold perturbs a factor by a matrix
 * supported on the touched rows and columns, so its rank is at most the
 * smaller of the two counts. Replacing one factor of the product changes
 * B B^H by at most twice that rank, and each unit of rank moves the
 * empirical spectral distribution by at most 1/n in sup norm.
 */

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuss/ensemble.hpp"
#include "fuss/matrix.hpp"

namespace fuss {

/// Threshold exponent gamma for the schedule alpha(n) = n^{-gamma}.
inline double parse_alpha_schedule(const std::string& name) {
    if (name == "n18") return 1.0 / 8.0;
    if (name == "n32") return 1.0 / 32.0;
    throw std::invalid_argument("unknown threshold schedule: " + name);
}

inline double alpha_threshold(unsigned n, double gamma) {
    return std::pow(static_cast<double>(n), -gamma);
}

struct TruncationResult {
    ComplexMatrix matrix;       // entries above the cutoff zeroed
    unsigned entries_cut = 0;
    unsigned rows_touched = 0;
    unsigned cols_touched = 0;

    unsigned rank_footprint() const { return std::min(rows_touched, cols_touched); }
};

/// Zero every entry with |x_ij| > cutoff.
inline TruncationResult truncate_entries(const ComplexMatrix& x, double cutoff) {
    TruncationResult out;
    out.matrix = x;
    const unsigned n = x.size();
    std::set<unsigned> rows, cols;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (std::hypot(x.re(i, j), x.im(i, j)) > cutoff) {
                out.matrix.re(i, j) = 0.0;
                out.matrix.im(i, j) = 0.0;
                ++out.entries_cut;
                rows.insert(i);
                cols.insert(j);
            }
    out.rows_touched = static_cast<unsigned>(rows.size());
    out.cols_touched = static_cast<unsigned>(cols.size());
    return out;
}

struct TruncatedProduct {
    ComplexMatrix matrix;             // product square rebuilt from truncated factors
    unsigned max_rank_footprint = 0;  // largest per-factor footprint
    unsigned entries_cut = 0;
};

/// Same trial as sample_product_matrix, but every factor has its large
/// entries zeroed before the product is formed.
inline TruncatedProduct truncated_product_matrix(const EnsembleSpec& spec, unsigned trial,
                                                 double cutoff) {
    if (spec.n == 0) throw std::invalid_argument("truncated_product_matrix: n must be positive");
    TruncatedProduct out;
    ComplexMatrix b;
    for (unsigned k = 0; k < spec.m; ++k) {
        auto cut = truncate_entries(sample_factor(spec, trial, k), cutoff);
        out.max_rank_footprint = std::max(out.max_rank_footprint, cut.rank_footprint());
        out.entries_cut += cut.entries_cut;
        b = (k == 0) ? std::move(cut.matrix) : multiply(b, cut.matrix);
    }
    b.scale(std::pow(static_cast<double>(spec.n), -0.5 * spec.m));
    out.matrix = adjoint_square(b);
    return out;
}

/// Sup-norm bound on the ESD shift when every one of the m factors is
/// perturbed by rank at most r: interlacing gives rank(W - W') / n, and
/// each factor swap contributes rank at most 2r to the product square.
inline double esd_rank_bound(unsigned m, unsigned r, unsigned n) {
    if (n == 0) throw std::invalid_argument("esd_rank_bound: n must be positive");
    return std::min(1.0, 2.0 * static_cast<double>(m) * r / n);
}

/// Mean of x^4 over the draws that exceed u in magnitude (not a conditional
/// mean: the indicator stays inside the average).
inline double tail_fourth_moment(const std::vector<double>& draws, double u) {
    if (draws.empty()) throw std::invalid_argument("tail_fourth_moment: no draws");
    double s = 0.0;
    for (double x : draws)
        if (std::abs(x) > u) s += x * x * x * x;
    return s / static_cast<double>(draws.size());
}

/// Exact E[x^4; |x| > u] for the standardized heavy-tailed family, via the
/// antiderivative of t^4 (1 + t)^{-11/2}.
inline double heavy4_tail_fourth_exact(double u) {
    const double sigma = std::sqrt(8.0 / 35.0);
    const double v = std::max(0.0, u * sigma);
    const double a = 1.0 + v;
    const double i1 = std::pow(a, -0.5);
    const double i3 = std::pow(a, -1.5);
    const double i5 = std::pow(a, -2.5);
    const double i7 = std::pow(a, -3.5);
    const double i9 = std::pow(a, -4.5);
    const double integral =
        2.0 * i1 - (8.0 / 3.0) * i3 + (12.0 / 5.0) * i5 - (8.0 / 7.0) * i7 + (2.0 / 9.0) * i9;
    return (1225.0 / 64.0) * 4.5 * integral;
}

}  // namespace fuss
