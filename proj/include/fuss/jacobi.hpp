#pragma once

/**
 * @file jacobi.hpp
 * @brief Hermitian eigenvalues: cyclic two-sided rotations, with a
 *        tridiagonalization fast path for large matrices.
 *
 * The rotation solver is the reference: each pivot (p, q) is annihilated by
 * a unitary built from the pivot's phase and the real rotation that would
 * diagonalize the corresponding 2x2 real problem. Off-diagonal mass is
 * strictly non-increasing, and the sweep loop stops once it falls below
 * 1e-12 of the input Frobenius norm.
 *
 * For large n the O(n^2) rotations per sweep lose to reduction: a
 * Householder pass makes the matrix tridiagonal (subdiagonal phases are a
 * diagonal similarity away from real, so only magnitudes are kept) and a
 * shifted QL iteration finishes on the two real vectors. Both paths are
 * cross-checked against each other in the tests.
 */

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fuss/errors.hpp"
#include "fuss/matrix.hpp"

namespace fuss {

enum class EigenMethod { automatic, rotation, tridiagonal };

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    unsigned sweeps = 0;              // rotation sweeps, or shift iterations
};

inline Spectrum rotation_eigenvalues(ComplexMatrix a, double tol = 1e-12,
                                     unsigned max_sweeps = 64) {
    const unsigned n = a.size();
    Spectrum out;
    if (n == 0) return out;
    if (n == 1) {
        out.eigenvalues = {a.re(0, 0)};
        return out;
    }
    const double target = tol * a.frobenius_norm();
    auto off_mass = [&] {
        double s = 0.0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (i != j) s += a.re(i, j) * a.re(i, j) + a.im(i, j) * a.im(i, j);
        return std::sqrt(s);
    };

    while (off_mass() > target) {
        if (out.sweeps >= max_sweeps)
            throw no_convergence("rotation eigensolver: off-diagonal mass stalled after " +
                                 std::to_string(max_sweeps) + " sweeps");
        ++out.sweeps;
        const double skip = target / (2.0 * n);
        for (unsigned p = 0; p + 1 < n; ++p) {
            for (unsigned q = p + 1; q < n; ++q) {
                const double br = a.re(p, q), bi = a.im(p, q);
                const double babs = std::hypot(br, bi);
                if (babs <= skip) continue;
                const double phr = br / babs, phi = bi / babs;  // e^{i phi}
                const double tau = (a.re(q, q) - a.re(p, p)) / (2.0 * babs);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double dpp = a.re(p, p) - t * babs;
                const double dqq = a.re(q, q) + t * babs;
                for (unsigned i = 0; i < n; ++i) {  // columns p, q of A <- A U
                    const double xr = a.re(i, p), xi = a.im(i, p);
                    const double yr = a.re(i, q), yi = a.im(i, q);
                    const double eyr = phr * yr + phi * yi;  // e^{-i phi} * y
                    const double eyi = phr * yi - phi * yr;
                    a.re(i, p) = c * xr - s * eyr;
                    a.im(i, p) = c * xi - s * eyi;
                    a.re(i, q) = s * xr + c * eyr;
                    a.im(i, q) = s * xi + c * eyi;
                }
                for (unsigned j = 0; j < n; ++j) {  // rows p, q of A <- U* A
                    const double xr = a.re(p, j), xi = a.im(p, j);
                    const double yr = a.re(q, j), yi = a.im(q, j);
                    const double eyr = phr * yr - phi * yi;  // e^{+i phi} * y
                    const double eyi = phr * yi + phi * yr;
                    a.re(p, j) = c * xr - s * eyr;
                    a.im(p, j) = c * xi - s * eyi;
                    a.re(q, j) = s * xr + c * eyr;
                    a.im(q, j) = s * xi + c * eyi;
                }
                a.re(p, p) = dpp;
                a.im(p, p) = 0.0;
                a.re(q, q) = dqq;
                a.im(q, q) = 0.0;
                a.re(p, q) = a.im(p, q) = a.re(q, p) = a.im(q, p) = 0.0;
            }
        }
    }
    out.eigenvalues.reserve(n);
    for (unsigned i = 0; i < n; ++i) out.eigenvalues.push_back(a.re(i, i));
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

namespace detail {

/// Reduce Hermitian a to real tridiagonal (d, off); off[i] couples d[i] and
/// d[i+1]. Only magnitudes of subdiagonals are kept, which is a diagonal
/// unitary similarity and leaves eigenvalues alone.
inline void householder_tridiagonalize(ComplexMatrix& a, std::vector<double>& d,
                                       std::vector<double>& off) {
    const unsigned n = a.size();
    d.assign(n, 0.0);
    off.assign(n >= 1 ? n - 1 : 0, 0.0);
    std::vector<double> vr(n), vi(n), wr(n), wi(n);
    for (unsigned k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (unsigned i = k + 1; i < n; ++i)
            xnorm2 += a.re(i, k) * a.re(i, k) + a.im(i, k) * a.im(i, k);
        const double xnorm = std::sqrt(xnorm2);
        off[k] = xnorm;
        if (xnorm == 0.0) continue;

        const double x0r = a.re(k + 1, k), x0i = a.im(k + 1, k);
        const double x0abs = std::hypot(x0r, x0i);
        const double phr = x0abs == 0.0 ? 1.0 : x0r / x0abs;
        const double phi = x0abs == 0.0 ? 0.0 : x0i / x0abs;
        // v = x + e^{i theta} |x| e_1: reflection with no cancellation.
        double vnorm2 = 0.0;
        for (unsigned i = k + 1; i < n; ++i) {
            vr[i] = a.re(i, k);
            vi[i] = a.im(i, k);
            if (i == k + 1) {
                vr[i] += phr * xnorm;
                vi[i] += phi * xnorm;
            }
            vnorm2 += vr[i] * vr[i] + vi[i] * vi[i];
        }
        const double tau = 2.0 / vnorm2;

        // w = tau * A v, then w -= (tau/2) (v* w) v; update A -= v w* + w v*.
        for (unsigned i = k + 1; i < n; ++i) {
            double sr = 0.0, si = 0.0;
            const double* are = a.re_row(i);
            const double* aim = a.im_row(i);
            for (unsigned j = k + 1; j < n; ++j) {
                sr += are[j] * vr[j] - aim[j] * vi[j];
                si += are[j] * vi[j] + aim[j] * vr[j];
            }
            wr[i] = tau * sr;
            wi[i] = tau * si;
        }
        double mur = 0.0, mui = 0.0;  // v* w
        for (unsigned i = k + 1; i < n; ++i) {
            mur += vr[i] * wr[i] + vi[i] * wi[i];
            mui += vr[i] * wi[i] - vi[i] * wr[i];
        }
        const double hr = 0.5 * tau * mur, hi = 0.5 * tau * mui;
        for (unsigned i = k + 1; i < n; ++i) {
            wr[i] -= hr * vr[i] - hi * vi[i];
            wi[i] -= hr * vi[i] + hi * vr[i];
        }
        for (unsigned i = k + 1; i < n; ++i) {
            double* are = a.re_row(i);
            double* aim = a.im_row(i);
            const double vir = vr[i], vii = vi[i], wir = wr[i], wii = wi[i];
            for (unsigned j = k + 1; j < n; ++j) {
                are[j] -= vir * wr[j] + vii * wi[j] + wir * vr[j] + wii * vi[j];
                aim[j] -= vii * wr[j] - vir * wi[j] + wii * vr[j] - wir * vi[j];
            }
        }
    }
    if (n >= 2) off[n - 2] = std::hypot(a.re(n - 1, n - 2), a.im(n - 1, n - 2));
    for (unsigned i = 0; i < n; ++i) d[i] = a.re(i, i);
}

/// Shifted QL on a real symmetric tridiagonal; returns shift iterations.
inline unsigned tridiagonal_ql(std::vector<double>& d, std::vector<double>& off) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return 0;
    std::vector<double> e(off);
    e.push_back(0.0);  // workspace slot e[n-1]
    unsigned total = 0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int split;
        do {
            for (split = l; split < n - 1; ++split) {
                const double scale = std::abs(d[split]) + std::abs(d[split + 1]);
                if (std::abs(e[split]) <= 1e-15 * scale) break;
            }
            if (split != l) {
                if (iter++ == 50)
                    throw no_convergence("tridiagonal eigensolver: block at index " +
                                         std::to_string(l) + " failed to split");
                ++total;
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[split] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = split - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {  // deflate and restart this block
                        d[i + 1] -= p;
                        e[split] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[split] = 0.0;
            }
        } while (split != l);
    }
    return total;
}

}  // namespace detail

inline Spectrum tridiagonal_eigenvalues(ComplexMatrix a) {
    std::vector<double> d, off;
    detail::householder_tridiagonalize(a, d, off);
    Spectrum out;
    out.sweeps = detail::tridiagonal_ql(d, off);
    std::sort(d.begin(), d.end());
    out.eigenvalues = std::move(d);
    return out;
}

/// Dispatch on size unless a method is forced. Rejects visibly non-Hermitian
/// input instead of silently symmetrizing it.
inline Spectrum hermitian_eigenvalues(const ComplexMatrix& a,
                                      EigenMethod method = EigenMethod::automatic) {
    if (hermitian_defect(a) > 1e-8 * (1.0 + a.frobenius_norm()))
        throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian");
    if (method == EigenMethod::automatic)
        method = a.size() >= 768 ? EigenMethod::tridiagonal : EigenMethod::rotation;
    return method == EigenMethod::rotation ? rotation_eigenvalues(a) : tridiagonal_eigenvalues(a);
}

}  // namespace fuss
