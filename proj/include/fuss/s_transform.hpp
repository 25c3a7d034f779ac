#pragma once

/**
 * @file s_transform.hpp
 * @brief Moment generating series of the limit law and its S-transform.
 *
 * The full moment series M(x) = sum_p M_p x^p satisfies the functional
 * equation M = 1 + x * M^{m+1}. The S-transform is built from the tail
 * series u(z) = sum_{p>=1} M_p z^p as S(z) = ((z+1)/z) * u^{-1}(z) and
 * must come out as (1+z)^{-m}, i.e. coefficients (-1)^j binom(m-1+j, j).
 */

#include "fuss_catalan.hpp"
#include "series.hpp"

namespace fuss {

/// M(x) = sum_{p=0..K} M_p^(m) x^p, exact rational coefficients.
inline TruncatedSeries moment_series(unsigned m, unsigned K) {
    FussCatalanTable t = FussCatalanTable::build(m, K);
    TruncatedSeries s(K);
    for (unsigned p = 0; p <= K; ++p) s.set_coeff(p, BigRat(t.values[p]));
    return s;
}

/// Residual M - 1 - x * M^{m+1}, truncated at order K. Zero iff the
/// functional equation holds through that order.
inline TruncatedSeries moment_series_residual(unsigned m, unsigned K) {
    TruncatedSeries M = moment_series(m, K);
    TruncatedSeries rhs = M.pow(m + 1).shifted_up();
    rhs.set_coeff(0, rhs.coeff(0) + 1);
    return M - rhs;
}

/// S(z) through order K-1. Reverts u(z) = sum_{p>=1} M_p z^p and
/// multiplies the z-quotient of the inverse by (z+1).
inline TruncatedSeries s_transform_series(unsigned m, unsigned K) {
    if (K < 2) throw std::invalid_argument("s_transform_series: order must be >= 2");
    TruncatedSeries u = moment_series(m, K);
    u.set_coeff(0, 0);  // tail series: drop M_0
    TruncatedSeries inv = series_reversion(u);
    TruncatedSeries q = inv.shifted_down();  // u^{-1}(z)/z, constant term 1
    TruncatedSeries zp1 = TruncatedSeries::constant(1, K);
    zp1.set_coeff(1, 1);
    return (q * zp1).truncated(K - 1);
}

}  // namespace fuss
