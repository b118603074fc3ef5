#pragma once

// Independent reference computations on plain mpq_class vectors. Nothing
// here calls into the library except for the two conversion helpers.

#include <riordan.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace oracle {

using Vec = std::vector<mpq_class>;
using Mat = std::vector<Vec>;  // square, row-major, zero above the diagonal

inline mpq_class q(const riordan::Scalar& s) { return s.as_rational(); }

inline Mat raw(const riordan::TriMatrix& a) {
    Mat m(a.order(), Vec(a.order(), 0));
    for (std::size_t n = 0; n < a.order(); ++n)
        for (std::size_t k = 0; k <= n; ++k) m[n][k] = q(a(n, k));
    return m;
}

inline Vec raw(const riordan::Series& s) {
    Vec v;
    for (const auto& c : s.coefficients()) v.push_back(q(c));
    return v;
}

inline Vec raw(const riordan::Weight& w) {
    Vec v;
    for (const auto& c : w.values()) v.push_back(q(c));
    return v;
}

inline mpz_class binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Mat identity(std::size_t n) {
    Mat m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat c(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) c[i][j] += a[i][l] * b[l][j];
    return c;
}

/// Gauss-Jordan on the full square matrix.
inline Mat inv(Mat a) {
    const std::size_t n = a.size();
    Mat b = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        const mpq_class d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            b[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const mpq_class f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                b[r][j] -= f * b[c][j];
            }
        }
    }
    return b;
}

inline Vec smul(const Vec& a, const Vec& b) {
    Vec c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

/// a / b by long division of power series (b_0 != 0).
inline Vec sdiv(const Vec& a, const Vec& b) {
    Vec c(a.size(), 0);
    for (std::size_t n = 0; n < a.size(); ++n) {
        mpq_class acc = a[n];
        for (std::size_t k = 1; k <= n; ++k) acc -= b[k] * c[n - k];
        c[n] = acc / b[0];
    }
    return c;
}

inline Vec spow(const Vec& a, std::size_t k) {
    Vec r(a.size(), 0);
    r[0] = 1;
    for (std::size_t i = 0; i < k; ++i) r = smul(r, a);
    return r;
}

/// Naive substitution sum_j outer_j inner^j.
inline Vec scompose(const Vec& outer, const Vec& inner) {
    Vec r(outer.size(), 0);
    for (std::size_t j = 0; j < outer.size(); ++j) {
        const Vec p = spow(inner, j);
        for (std::size_t n = 0; n < r.size(); ++n) r[n] += outer[j] * p[n];
    }
    return r;
}

/// Lagrange inversion: [y^n] bbar = (1/n) [y^{n-1}] (y/b)^n.
inline Vec lagrange_inverse(const Vec& b) {
    const std::size_t n_terms = b.size();
    Vec b_over_y(n_terms, 0);
    for (std::size_t i = 1; i < n_terms; ++i) b_over_y[i - 1] = b[i];
    Vec one(n_terms, 0);
    one[0] = 1;
    const Vec phi = sdiv(one, b_over_y);
    Vec out(n_terms, 0);
    for (std::size_t n = 1; n < n_terms; ++n) out[n] = spow(phi, n)[n - 1] / static_cast<long>(n);
    return out;
}

/// a_{n,k} = w_n [y^n](alpha beta^k) / w_k
inline Mat pair_matrix(const Vec& alpha, const Vec& beta, const Vec& w) {
    const std::size_t n = alpha.size();
    Mat m(n, Vec(n, 0));
    for (std::size_t k = 0; k < n; ++k) {
        const Vec col = smul(alpha, spow(beta, k));
        for (std::size_t r = k; r < n; ++r) m[r][k] = w[r] * col[r] / w[k];
    }
    return m;
}

/// Riordan membership by reconstruction: alpha = C_0, beta = w_1 C_1 / C_0,
/// then rebuild the matrix and compare.
inline bool riordan_by_reconstruction(const Mat& a, const Vec& w) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        if (a[i][i] == 0) return false;
    Vec c0(n, 0), c1(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        c0[r] = a[r][0] / w[r];
        if (r >= 1) c1[r] = w[1] * a[r][1] / w[r];
    }
    return pair_matrix(c0, sdiv(c1, c0), w) == a;
}

inline riordan::TriMatrix to_matrix(const Mat& m) {
    riordan::TriMatrix a(m.size(), riordan::Field::rational());
    for (std::size_t n = 0; n < m.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k) a(n, k) = riordan::Scalar::rational(m[n][k]);
    return a;
}

inline riordan::Series to_series(const Vec& v) {
    std::vector<riordan::Scalar> c;
    for (const auto& x : v) c.push_back(riordan::Scalar::rational(x));
    return riordan::Series(std::move(c));
}

}  // namespace oracle
