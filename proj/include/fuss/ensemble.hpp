#pragma once

/**
 * @file ensemble.hpp
 * @brief Entry distributions and product-matrix sampling.
 *
 * All families are centered with unit variance so the same product
 * normalization applies throughout. The heavy-tailed family has density
 * proportional to (1 + |x| * sigma)^{-11/2} after standardization: fourth
 * moments exist (E x^4 = 70) but sixth moments do not, which is exactly the
 * regime the truncation experiments probe.
 */

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "fuss/matrix.hpp"
#include "fuss/rng.hpp"

namespace fuss {

enum class Family { complex_gaussian, real_gaussian, rademacher, heavy4 };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::complex_gaussian: return "complex-gaussian";
        case Family::real_gaussian: return "real-gaussian";
        case Family::rademacher: return "rademacher";
        case Family::heavy4: return "heavy4";
    }
    throw std::logic_error("family_name: unknown family");
}

inline Family parse_family(const std::string& name) {
    if (name == "complex-gaussian") return Family::complex_gaussian;
    if (name == "real-gaussian") return Family::real_gaussian;
    if (name == "rademacher") return Family::rademacher;
    if (name == "heavy4") return Family::heavy4;
    throw std::invalid_argument("unknown entry family: " + name);
}

/// Scale that standardizes the one-sided heavy draw; its square is the raw
/// variance 8/35.
inline double heavy4_sigma() { return std::sqrt(8.0 / 35.0); }

/// Fourth moment E|x|^4 of a standardized entry.
inline double family_fourth_moment(Family f) {
    switch (f) {
        case Family::complex_gaussian: return 2.0;
        case Family::real_gaussian: return 3.0;
        case Family::rademacher: return 1.0;
        case Family::heavy4: return 70.0;
    }
    throw std::logic_error("family_fourth_moment: unknown family");
}

/// One standardized draw; entry e of a stream owns positions 2e and 2e + 1.
inline std::complex<double> draw_entry(Family f, const Stream& stream, std::uint64_t entry) {
    const std::uint64_t pos = 2 * entry;
    switch (f) {
        case Family::complex_gaussian: {
            auto [g0, g1] = stream.gaussian_pair(pos);
            return {g0 * M_SQRT1_2, g1 * M_SQRT1_2};
        }
        case Family::real_gaussian: {
            auto [g0, g1] = stream.gaussian_pair(pos);
            (void)g1;
            return {g0, 0.0};
        }
        case Family::rademacher:
            return {stream.sign(pos), 0.0};
        case Family::heavy4: {
            double v = stream.unit_open(pos);
            double magnitude = std::exp(-2.0 / 9.0 * std::log(v)) - 1.0;
            return {stream.sign(pos + 1) * magnitude / heavy4_sigma(), 0.0};
        }
    }
    throw std::logic_error("draw_entry: unknown family");
}

struct EnsembleSpec {
    Family family = Family::complex_gaussian;
    unsigned n = 0;            // matrix dimension
    unsigned m = 1;            // factors in the product
    std::uint64_t seed = 1;
};

/// Factor number `factor` (0-based, < m) of trial `trial`: iid entries,
/// addressed so the sample never depends on traversal or thread order.
inline ComplexMatrix sample_factor(const EnsembleSpec& spec, unsigned trial, unsigned factor) {
    ComplexMatrix x(spec.n);
    Stream stream(stream_key(spec.seed, trial, factor));
    std::uint64_t entry = 0;
    for (unsigned i = 0; i < spec.n; ++i)
        for (unsigned j = 0; j < spec.n; ++j, ++entry)
            x.set(i, j, draw_entry(spec.family, stream, entry));
    return x;
}

/// W = B B^H with B the normalized product of m iid factors. Hermitian and
/// positive semidefinite by construction.
inline ComplexMatrix sample_product_matrix(const EnsembleSpec& spec, unsigned trial) {
    if (spec.n == 0) throw std::invalid_argument("sample_product_matrix: n must be positive");
    if (spec.m < 1) throw std::invalid_argument("sample_product_matrix: m must be >= 1");
    ComplexMatrix b = sample_factor(spec, trial, 0);
    for (unsigned k = 1; k < spec.m; ++k) b = multiply(b, sample_factor(spec, trial, k));
    b.scale(std::pow(static_cast<double>(spec.n), -0.5 * spec.m));
    return adjoint_square(b);
}

}  // namespace fuss
