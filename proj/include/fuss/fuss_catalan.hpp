#pragma once

/**
 * @file fuss_catalan.hpp
 * @brief Exact Fuss-Catalan numbers binom(mp+p, p)/(mp+1) and their
 *        composition recurrence, over arbitrary-precision integers.
 *
 * M_p = binom(mp+p, p)/(mp+1) is always an integer; the division is
 * checked and an inexact quotient is treated as an internal error.
 * The recurrence route sums prod_{i=0..m} M_{p_i} over all (m+1)-part
 * compositions p_0+...+p_m = p-1 and must reproduce the closed form.
 */

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"

namespace fuss {

inline BigInt binomial_exact(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r stays integral after each division: r = binom(n, i) at step i.
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        BigInt q, rem;
        boost::multiprecision::divide_qr(r, BigInt(i), q, rem);
        if (rem != 0) throw std::logic_error("binomial_exact: inexact division");
        r = q;
    }
    return r;
}

/// Closed form M_p^(m) = binom(mp+p, p) / (mp+1), exact.
inline BigInt fuss_catalan(unsigned m, unsigned p) {
    if (m < 1) throw std::invalid_argument("fuss_catalan: m must be >= 1");
    BigInt b = binomial_exact(m * p + p, p);
    BigInt q, rem;
    boost::multiprecision::divide_qr(b, BigInt(m * p + 1), q, rem);
    if (rem != 0) throw std::logic_error("fuss_catalan: binom(mp+p,p) not divisible by mp+1");
    return q;
}

/// Table of M_0..M_p_max for one m. values[p] = M_p.
struct FussCatalanTable {
    unsigned m = 1;
    std::vector<BigInt> values;

    static FussCatalanTable build(unsigned m, unsigned p_max) {
        FussCatalanTable t;
        t.m = m;
        t.values.reserve(p_max + 1);
        for (unsigned p = 0; p <= p_max; ++p) t.values.push_back(fuss_catalan(m, p));
        return t;
    }

    unsigned p_max() const { return values.empty() ? 0 : unsigned(values.size() - 1); }

    const BigInt& at(unsigned p) const {
        if (p >= values.size())
            throw std::out_of_range("FussCatalanTable: entry p=" + std::to_string(p) + " not stored");
        return values[p];
    }

    void write_csv(std::ostream& os) const {
        os << "m,p,value\n";
        for (unsigned p = 0; p < values.size(); ++p)
            os << m << ',' << p << ',' << values[p] << '\n';
    }
};

/// Recurrence route: M_p = sum over compositions p_0+...+p_m = p-1 of
/// prod_i M_{p_i}, with M_0 = 1. Needs table entries for all p' < p.
inline BigInt fc_recurrence(unsigned m, unsigned p, const FussCatalanTable& table) {
    if (table.m != m) throw std::invalid_argument("fc_recurrence: table built for different m");
    if (p == 0) return 1;
    if (table.p_max() + 1 < p)
        throw std::out_of_range("fc_recurrence: table missing entries below p");
    BigInt total = 0;
    // Walk compositions of p-1 into exactly m+1 non-negative parts.
    std::vector<unsigned> parts(m + 1, 0);
    auto rec = [&](auto&& self, unsigned slot, unsigned remaining, const BigInt& prod) -> void {
        if (slot == m) {
            total += prod * table.at(remaining);
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v)
            self(self, slot + 1, remaining - v, prod * table.at(v));
    };
    rec(rec, 0, p - 1, BigInt(1));
    return total;
}

}  // namespace fuss
