#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series over exact rationals.
 *
 * A TruncatedSeries of order K carries coefficients c_0..c_K and all
 * operations are exact modulo z^{K+1}. Binary operations truncate to the
 * smaller order of the two operands. Reversion requires c_0 = 0 and
 * c_1 != 0 and produces the compositional inverse order by order.
 */

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace fuss {

class TruncatedSeries {
  public:
    TruncatedSeries() : c_(1, BigRat(0)) {}
    explicit TruncatedSeries(unsigned order) : c_(order + 1, BigRat(0)) {}
    TruncatedSeries(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.assign(1, BigRat(0));
    }

    unsigned order() const { return unsigned(c_.size() - 1); }

    const BigRat& coeff(unsigned k) const {
        if (k >= c_.size()) throw std::out_of_range("TruncatedSeries: coefficient index past order");
        return c_[k];
    }
    void set_coeff(unsigned k, const BigRat& v) {
        if (k >= c_.size()) throw std::out_of_range("TruncatedSeries: coefficient index past order");
        c_[k] = v;
    }

    static TruncatedSeries constant(const BigRat& v, unsigned order) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }
    static TruncatedSeries identity(unsigned order) {  // z
        TruncatedSeries s(order);
        if (order >= 1) s.c_[1] = 1;
        return s;
    }

    TruncatedSeries truncated(unsigned order) const {
        TruncatedSeries s(order);
        for (unsigned k = 0; k <= std::min(order, this->order()); ++k) s.c_[k] = c_[k];
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        unsigned n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (unsigned k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        unsigned n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (unsigned k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        unsigned n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (unsigned i = 0; i <= n; ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned j = 0; i + j <= n; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    TruncatedSeries pow(unsigned e) const {
        TruncatedSeries r = constant(1, order());
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Multiply by z (shift coefficients up, dropping the one past the order).
    TruncatedSeries shifted_up() const {
        TruncatedSeries r(order());
        for (unsigned k = 1; k <= order(); ++k) r.c_[k] = c_[k - 1];
        return r;
    }

    /// Divide by z; requires c_0 = 0. Top coefficient of the result is 0.
    TruncatedSeries shifted_down() const {
        if (c_[0] != 0) throw std::invalid_argument("shifted_down: constant term nonzero");
        TruncatedSeries r(order());
        for (unsigned k = 0; k + 1 <= order(); ++k) r.c_[k] = c_[k + 1];
        return r;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    std::string str() const {
        std::ostringstream os;
        for (unsigned k = 0; k <= order(); ++k) {
            if (k) os << " + ";
            os << '(' << c_[k] << ")z^" << k;
        }
        return os.str();
    }

  private:
    std::vector<BigRat> c_;  // c_[k] multiplies z^k
};

/// Substitute inner into outer; inner must have zero constant term.
inline TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner.coeff(0) != 0)
        throw std::invalid_argument("series_compose: inner constant term must be 0");
    unsigned n = std::min(outer.order(), inner.order());
    TruncatedSeries acc = TruncatedSeries::constant(outer.coeff(n), n);
    for (unsigned k = n; k-- > 0;) {
        acc = acc * inner;
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(k));
    }
    return acc;
}

/// Compositional inverse v with u(v(z)) = z + O(z^{K+1}).
/// Requires u(0) = 0 and u'(0) != 0.
inline TruncatedSeries series_reversion(const TruncatedSeries& u) {
    if (u.coeff(0) != 0)
        throw std::invalid_argument("series_reversion: constant term must be 0");
    if (u.order() < 1 || u.coeff(1) == 0)
        throw std::invalid_argument("series_reversion: linear term must be nonzero");
    unsigned K = u.order();
    TruncatedSeries v(K);
    v.set_coeff(1, BigRat(1) / u.coeff(1));
    // Determine v_n from [z^n] u(v) = 0 for n >= 2; only the u_1 * v_n term
    // involves v_n, everything else uses coefficients below n.
    for (unsigned n = 2; n <= K; ++n) {
        TruncatedSeries comp = series_compose(u.truncated(n), v.truncated(n));
        v.set_coeff(n, -comp.coeff(n) / u.coeff(1));
    }
    return v;
}

}  // namespace fuss
