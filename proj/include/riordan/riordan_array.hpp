#pragma once

// Weights, Riordan pairs and the weighted Riordan group R_W.

#include <riordan/larray.hpp>
#include <riordan/series.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace riordan {

/// W(t) = sum t^n / w_n with w_0 = 1 and every w_n nonzero.
class Weight {
public:
    explicit Weight(std::vector<Scalar> w) : w_(std::move(w)), u_(Series::one(1, Field::rational())) {
        if (w_.empty()) throw Error(Errc::invalid_weight, "weight needs at least one entry");
        if (!w_[0].is_one()) throw Error(Errc::invalid_weight, "w_0 must be 1, got " + w_[0].to_string());
        const Field f = w_[0].field();
        std::vector<Scalar> u;
        u.reserve(w_.size());
        for (std::size_t n = 0; n < w_.size(); ++n) {
            if (w_[n].field() != f) throw Error(Errc::backend_mismatch, "weight entries from different fields");
            if (w_[n].is_zero()) throw Error(Errc::invalid_weight, "w_" + std::to_string(n) + " is zero");
            u.push_back(w_[n].inverse());
        }
        u_ = Series(std::move(u));
    }

    /// w_n = lambda^n n!
    static Weight exponential(const Scalar& lambda, std::size_t order) {
        require_lambda(lambda);
        const Field f = lambda.field();
        if (!f.is_rational() && order > f.modulus())
            throw Error(Errc::not_invertible, std::to_string(f.modulus()) + "! vanishes in characteristic " +
                                                  std::to_string(f.modulus()));
        std::vector<Scalar> w{f.one()};
        for (std::size_t n = 1; n < order; ++n) w.push_back(w.back() * lambda * f.from_int(static_cast<long>(n)));
        return Weight(std::move(w));
    }

    /// w_n = lambda^n
    static Weight geometric(const Scalar& lambda, std::size_t order) {
        require_lambda(lambda);
        std::vector<Scalar> w{lambda.field().one()};
        for (std::size_t n = 1; n < order; ++n) w.push_back(w.back() * lambda);
        return Weight(std::move(w));
    }

    /// w_n = (lambda/(1-q))^n prod_{j=1}^n (1-q^j)
    static Weight q_factorial(const Scalar& lambda, const Scalar& q, std::size_t order) {
        require_lambda(lambda);
        if (q.field() != lambda.field()) throw Error(Errc::backend_mismatch, "lambda and q from different fields");
        if (q.is_zero()) throw Error(Errc::invalid_argument, "q must be nonzero");
        const Scalar one = q.field().one();
        std::vector<Scalar> w{one};
        Scalar qj = one;
        for (std::size_t j = 1; j < order; ++j) {
            qj *= q;
            if (qj.is_one()) throw Error(Errc::root_of_unity, "q^" + std::to_string(j) + " = 1 for q = " + q.to_string());
        }
        const Scalar scale = lambda / (one - q);
        qj = one;
        for (std::size_t n = 1; n < order; ++n) {
            qj *= q;
            w.push_back(w.back() * scale * (one - qj));
        }
        return Weight(std::move(w));
    }

    std::size_t order() const noexcept { return w_.size(); }
    Field field() const { return w_[0].field(); }
    const Scalar& operator[](std::size_t n) const { return w_[n]; }
    const std::vector<Scalar>& values() const noexcept { return w_; }

    /// The series W(t) itself, coefficients 1/w_n.
    const Series& series() const noexcept { return u_; }
    const Scalar& reciprocal(std::size_t n) const { return u_[n]; }

    friend bool operator==(const Weight& a, const Weight& b) { return a.w_ == b.w_; }

private:
    static void require_lambda(const Scalar& lambda) {
        if (lambda.is_zero()) throw Error(Errc::zero_lambda, "lambda must be nonzero");
    }

    std::vector<Scalar> w_;
    Series u_;
};

/// w_n -> lambda^n w_n
inline Weight rescale_weight(const Weight& w, const Scalar& lambda) {
    if (lambda.is_zero()) throw Error(Errc::zero_lambda, "lambda must be nonzero");
    std::vector<Scalar> out;
    Scalar ln = lambda.field().one();
    for (std::size_t n = 0; n < w.order(); ++n) {
        out.push_back(ln * w[n]);
        ln *= lambda;
    }
    return Weight(std::move(out));
}

/// (alpha, beta) with v(alpha) = 0 and v(beta) = 1.
struct RiordanPair {
    Series alpha;
    Series beta;

    RiordanPair(Series a, Series b) : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha.order() != beta.order()) throw Error(Errc::order_mismatch, "alpha and beta orders differ");
        if (alpha.field() != beta.field()) throw Error(Errc::backend_mismatch, "alpha and beta from different fields");
        if (alpha[0].is_zero()) throw Error(Errc::not_valuation_zero, "alpha must have a nonzero constant term");
        if (!beta[0].is_zero() || beta[1].is_zero()) throw Error(Errc::not_valuation_one, "beta must have valuation 1");
    }

    static RiordanPair identity(std::size_t order, const Field& f) {
        return {Series::one(order, f), identity_series(order, f)};
    }

    std::size_t order() const noexcept { return alpha.order(); }

    friend bool operator==(const RiordanPair&, const RiordanPair&) = default;
};

namespace detail {

inline void check_weight(const TriMatrix& a, const Weight& w) {
    if (a.order() != w.order()) throw Error(Errc::order_mismatch, "matrix and weight orders differ");
    if (a.field() != w.field()) throw Error(Errc::backend_mismatch, "matrix and weight over different fields");
}

inline void check_weight(const Series& s, const Weight& w) {
    if (s.order() != w.order()) throw Error(Errc::order_mismatch, "series and weight orders differ");
    if (s.field() != w.field()) throw Error(Errc::backend_mismatch, "series and weight over different fields");
}

}  // namespace detail

/// C_k(y) = sum_n a_{n,k} y^n / w_n
inline Series column_series(const TriMatrix& a, const Weight& w, std::size_t k) {
    detail::check_weight(a, w);
    if (k >= a.order()) throw Error(Errc::invalid_argument, "column index out of range");
    Series c = Series::zero(a.order(), a.field());
    for (std::size_t n = k; n < a.order(); ++n) c[n] = a(n, k) * w.reciprocal(n);
    return c;
}

/// Membership in R_W at order N.
///
/// With D_k = w_k C_k / y^k the defining identity reads D_k^2 = D_{k-1} D_{k+1};
/// it is compared modulo y^{N-k-1}, which is all the truncated D_{k+1} knows.
inline bool is_riordan(const TriMatrix& a, const Weight& w) {
    detail::check_weight(a, w);
    if (!is_graded(a)) return false;
    const std::size_t order = a.order();
    auto d = [&](std::size_t k, std::size_t len) {
        std::vector<Scalar> v;
        v.reserve(len);
        for (std::size_t m = 0; m < len; ++m) v.push_back(w[k] * a(m + k, k) * w.reciprocal(m + k));
        return v;
    };
    auto mul = [](const std::vector<Scalar>& x, const std::vector<Scalar>& y, std::size_t len, const Field& f) {
        std::vector<Scalar> r(len, f.zero());
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j) r[i + j] += x[i] * y[j];
        return r;
    };
    for (std::size_t k = 1; k + 2 <= order; ++k) {
        const std::size_t len = order - k - 1;
        auto dk = d(k, len);
        if (mul(dk, dk, len, a.field()) != mul(d(k - 1, len), d(k + 1, len), len, a.field())) return false;
    }
    return true;
}

/// a_{n,k} = w_n [y^n](alpha beta^k) / w_k
inline TriMatrix pair_to_matrix(const RiordanPair& p, const Weight& w) {
    detail::check_weight(p.alpha, w);
    const std::size_t order = p.order();
    TriMatrix a(order, w.field());
    Series col = p.alpha;
    for (std::size_t k = 0; k < order; ++k) {
        for (std::size_t n = k; n < order; ++n) a(n, k) = w[n] * col[n] * w.reciprocal(k);
        col = col * p.beta;
    }
    return a;
}

inline RiordanPair matrix_to_pair(const TriMatrix& a, const Weight& w) {
    if (!is_riordan(a, w)) throw Error(Errc::not_riordan, "matrix is not in R_W at order " + std::to_string(a.order()));
    Series c0 = column_series(a, w, 0);
    Series beta = divide(w[1] * column_series(a, w, 1), c0);
    return {std::move(c0), std::move(beta)};
}

/// (alpha, beta)(gamma, delta) = (alpha (gamma o beta), delta o beta)
inline RiordanPair operator*(const RiordanPair& a, const RiordanPair& b) {
    return {a.alpha * compose(b.alpha, a.beta), compose(b.beta, a.beta)};
}

inline RiordanPair inverse(const RiordanPair& a) {
    Series bbar = compositional_inverse(a.beta);
    return {inverse(compose(a.alpha, bbar)), std::move(bbar)};
}

/// Columns in x of alpha(y) W(x beta(y)): column k is alpha beta^k / w_k.
inline std::vector<Series> generating_expansion(const RiordanPair& p, const Weight& w) {
    detail::check_weight(p.alpha, w);
    std::vector<Series> cols;
    cols.reserve(p.order());
    Series col = p.alpha;
    for (std::size_t k = 0; k < p.order(); ++k) {
        cols.push_back(col * w.reciprocal(k));
        col = col * p.beta;
    }
    return cols;
}

/// U^{-1} A U with U = diag(w_n / w2_n).
inline TriMatrix change_weight(const TriMatrix& a, const Weight& w, const Weight& w2) {
    detail::check_weight(a, w);
    detail::check_weight(a, w2);
    TriMatrix b(a.order(), a.field());
    for (std::size_t n = 0; n < a.order(); ++n)
        for (std::size_t k = 0; k <= n; ++k) b(n, k) = a(n, k) * w2[n] * w.reciprocal(n) * w[k] * w2.reciprocal(k);
    return b;
}

}  // namespace riordan
