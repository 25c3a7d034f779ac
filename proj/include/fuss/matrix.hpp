#pragma once

/**
 * @file matrix.hpp
 * @brief Dense complex matrices with split real/imaginary storage.
 *
 * Planar layout keeps the multiply kernels on contiguous doubles, which is
 * what the single-core throughput of the whole simulation pipeline hangs on.
 */

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace fuss {

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(unsigned n) : n_(n), re_(std::size_t(n) * n), im_(std::size_t(n) * n) {}

    unsigned size() const { return n_; }

    double& re(unsigned i, unsigned j) { return re_[idx(i, j)]; }
    double& im(unsigned i, unsigned j) { return im_[idx(i, j)]; }
    double re(unsigned i, unsigned j) const { return re_[idx(i, j)]; }
    double im(unsigned i, unsigned j) const { return im_[idx(i, j)]; }

    std::complex<double> at(unsigned i, unsigned j) const { return {re(i, j), im(i, j)}; }
    void set(unsigned i, unsigned j, std::complex<double> z) {
        re(i, j) = z.real();
        im(i, j) = z.imag();
    }

    const double* re_row(unsigned i) const { return re_.data() + std::size_t(i) * n_; }
    const double* im_row(unsigned i) const { return im_.data() + std::size_t(i) * n_; }
    double* re_row(unsigned i) { return re_.data() + std::size_t(i) * n_; }
    double* im_row(unsigned i) { return im_.data() + std::size_t(i) * n_; }

    static ComplexMatrix identity(unsigned n) {
        ComplexMatrix out(n);
        for (unsigned i = 0; i < n; ++i) out.re(i, i) = 1.0;
        return out;
    }

    void scale(double factor) {
        for (auto& v : re_) v *= factor;
        for (auto& v : im_) v *= factor;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : re_) s += v * v;
        for (double v : im_) s += v * v;
        return std::sqrt(s);
    }

  private:
    std::size_t idx(unsigned i, unsigned j) const { return std::size_t(i) * n_ + j; }

    unsigned n_ = 0;
    std::vector<double> re_, im_;
};

/// C = A * B, accumulated row by row over four planar streams.
inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    const unsigned n = a.size();
    if (b.size() != n) throw std::invalid_argument("multiply: size mismatch");
    ComplexMatrix c(n);
    for (unsigned i = 0; i < n; ++i) {
        double* cre = c.re_row(i);
        double* cim = c.im_row(i);
        for (unsigned k = 0; k < n; ++k) {
            const double ar = a.re_row(i)[k];
            const double ai = a.im_row(i)[k];
            const double* bre = b.re_row(k);
            const double* bim = b.im_row(k);
            for (unsigned j = 0; j < n; ++j) {
                cre[j] += ar * bre[j] - ai * bim[j];
                cim[j] += ar * bim[j] + ai * bre[j];
            }
        }
    }
    return c;
}

/// A * A^H, computed on the lower triangle and mirrored, so the result is
/// Hermitian to the last bit.
inline ComplexMatrix adjoint_square(const ComplexMatrix& a) {
    const unsigned n = a.size();
    ComplexMatrix c(n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j <= i; ++j) {
            const double* ari = a.re_row(i);
            const double* aii = a.im_row(i);
            const double* arj = a.re_row(j);
            const double* aij = a.im_row(j);
            double sre = 0.0, sim = 0.0;
            for (unsigned k = 0; k < n; ++k) {
                sre += ari[k] * arj[k] + aii[k] * aij[k];
                sim += aii[k] * arj[k] - ari[k] * aij[k];
            }
            c.re(i, j) = sre;
            c.im(i, j) = sim;
            c.re(j, i) = sre;
            c.im(j, i) = -sim;
        }
        c.im(i, i) = 0.0;
    }
    return c;
}

inline double hermitian_defect(const ComplexMatrix& a) {
    double worst = 0.0;
    for (unsigned i = 0; i < a.size(); ++i)
        for (unsigned j = 0; j <= i; ++j) {
            worst = std::max(worst, std::abs(a.re(i, j) - a.re(j, i)));
            worst = std::max(worst, std::abs(a.im(i, j) + a.im(j, i)));
        }
    return worst;
}

/// Normalized traces tr(W^p)/n for p = 1..p_max, W Hermitian. Powers are
/// built only up to ceil(p_max / 2); tr(W^{a+b}) is the inner product of
/// W^a and W^b, using hermiticity of the factors.
inline std::vector<double> trace_moments(const ComplexMatrix& w, unsigned p_max) {
    const unsigned n = w.size();
    if (n == 0 || p_max == 0) return {};
    const unsigned half = (p_max + 1) / 2;
    std::vector<ComplexMatrix> powers;
    powers.push_back(w);
    for (unsigned a = 2; a <= half; ++a) powers.push_back(multiply(powers.back(), w));

    std::vector<double> out;
    out.reserve(p_max);
    for (unsigned p = 1; p <= p_max; ++p) {
        double tre = 0.0, tim = 0.0;
        if (p == 1) {
            for (unsigned i = 0; i < n; ++i) tre += w.re(i, i);
        } else {
            const ComplexMatrix& wa = powers[(p - p / 2) - 1];
            const ComplexMatrix& wb = powers[p / 2 - 1];
            for (unsigned i = 0; i < n; ++i) {
                const double* xr = wa.re_row(i);
                const double* xi = wa.im_row(i);
                const double* yr = wb.re_row(i);
                const double* yi = wb.im_row(i);
                for (unsigned j = 0; j < n; ++j) {
                    tre += xr[j] * yr[j] + xi[j] * yi[j];
                    tim += xi[j] * yr[j] - xr[j] * yi[j];
                }
            }
        }
        if (std::abs(tim) > 1e-9 * std::max(static_cast<double>(n), std::abs(tre)))
            throw std::logic_error("trace_moments: trace of a Hermitian power came out complex");
        out.push_back(tre / n);
    }
    return out;
}

}  // namespace fuss
