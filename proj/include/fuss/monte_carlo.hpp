#pragma once

/**
 * @file monte_carlo.hpp
 * @brief Trial loops: spectra and normalized trace moments over an ensemble.
 */

#include <cmath>
#include <vector>

#include "fuss/ensemble.hpp"
#include "fuss/fuss_catalan.hpp"
#include "fuss/jacobi.hpp"
#include "fuss/matrix.hpp"
#include "fuss/parallel.hpp"

namespace fuss {

struct MomentReport {
    unsigned m = 1, p = 1, n = 0, trials = 0;
    double mean = 0.0;
    double std_error = 0.0;
    double reference = 0.0;  // limiting value of the normalized trace
};

/// Per-trial normalized traces tr(W^p)/n, p = 1..p_max; rows are trials.
inline std::vector<std::vector<double>> trial_trace_moments(const EnsembleSpec& spec,
                                                            unsigned trials, unsigned p_max) {
    return parallel_map_trials(trials, [&](unsigned t) {
        return trace_moments(sample_product_matrix(spec, t), p_max);
    });
}

inline std::vector<MomentReport> monte_carlo_moments(const EnsembleSpec& spec, unsigned trials,
                                                     unsigned p_max) {
    if (trials == 0) throw std::invalid_argument("monte_carlo_moments: trials must be positive");
    auto rows = trial_trace_moments(spec, trials, p_max);
    FussCatalanTable table = FussCatalanTable::build(spec.m, p_max);
    std::vector<MomentReport> out;
    for (unsigned p = 1; p <= p_max; ++p) {
        MomentReport rep;
        rep.m = spec.m;
        rep.p = p;
        rep.n = spec.n;
        rep.trials = trials;
        double sum = 0.0;
        for (const auto& row : rows) sum += row[p - 1];
        rep.mean = sum / trials;
        double ss = 0.0;
        for (const auto& row : rows) ss += (row[p - 1] - rep.mean) * (row[p - 1] - rep.mean);
        rep.std_error = trials > 1 ? std::sqrt(ss / (double(trials) * (trials - 1))) : 0.0;
        rep.reference = static_cast<double>(table.at(p));
        out.push_back(rep);
    }
    return out;
}

/// Eigenvalues per trial, ascending within each trial.
inline std::vector<std::vector<double>> simulate_spectra(const EnsembleSpec& spec, unsigned trials,
                                                         EigenMethod method = EigenMethod::automatic) {
    return parallel_map_trials(trials, [&](unsigned t) {
        return hermitian_eigenvalues(sample_product_matrix(spec, t), method).eigenvalues;
    });
}

}  // namespace fuss
