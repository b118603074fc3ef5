#pragma once

// Operators on F[x] as lower-triangular matrices: entry (n,k) of the matrix
// of S is the coefficient of x^k in S(x^n), so S o R corresponds to R * S.

#include <riordan/riordan_array.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace riordan {

/// Triangle of polynomials in h, entry (n,k) for k <= n.
class HPolyMatrix {
public:
    HPolyMatrix(std::size_t order, const Field& field) : n_(order), e_(order * (order + 1) / 2, Polynomial(field)) {}

    std::size_t order() const noexcept { return n_; }
    Polynomial& operator()(std::size_t n, std::size_t k) { return e_[n * (n + 1) / 2 + k]; }
    const Polynomial& operator()(std::size_t n, std::size_t k) const { return e_[n * (n + 1) / 2 + k]; }

    friend bool operator==(const HPolyMatrix&, const HPolyMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Polynomial> e_;
};

/// Matrix of D_W: w_n / w_{n-1} on the subdiagonal.
inline TriMatrix m_matrix(const Weight& w) {
    TriMatrix m(w.order(), w.field());
    for (std::size_t n = 1; n < w.order(); ++n) m(n, n - 1) = w[n] * w.reciprocal(n - 1);
    return m;
}

/// T_{h,W}: entry (n,k) = w_n h^{n-k} / (w_{n-k} w_k).
inline TriMatrix translation_matrix(const Weight& w, const Scalar& h) {
    const std::size_t order = w.order();
    TriMatrix t(order, w.field());
    std::vector<Scalar> hp{w.field().one()};
    for (std::size_t j = 1; j < order; ++j) hp.push_back(hp.back() * h);
    for (std::size_t n = 0; n < order; ++n)
        for (std::size_t k = 0; k <= n; ++k) t(n, k) = w[n] * hp[n - k] * w.reciprocal(n - k) * w.reciprocal(k);
    return t;
}

/// Matrix of the lowering operator Q_{A,W}: A^{-1} M_W A.
inline TriMatrix q_operator(const TriMatrix& a, const Weight& w) {
    detail::check_weight(a, w);
    return inverse(a) * m_matrix(w) * a;
}

/// d_{n,k}(h) = C_{n,k}(h) w_{n-k} w_k / w_n where C(h) = sum_l h^l/w_l A M^l A^{-1}.
inline HPolyMatrix d_polynomials(const TriMatrix& a, const Weight& w) {
    detail::check_weight(a, w);
    const std::size_t order = a.order();
    const Field f = a.field();
    const TriMatrix ainv = inverse(a);
    const TriMatrix m = m_matrix(w);

    std::vector<std::vector<std::vector<Scalar>>> coeffs(order);
    for (std::size_t n = 0; n < order; ++n) coeffs[n].assign(n + 1, std::vector<Scalar>(order, f.zero()));

    TriMatrix mp = TriMatrix::identity(order, f);
    for (std::size_t l = 0; l < order; ++l) {
        const TriMatrix c = a * mp * ainv;
        for (std::size_t n = 0; n < order; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                if (!c(n, k).is_zero())
                    coeffs[n][k][l] = c(n, k) * w.reciprocal(l) * w[n - k] * w[k] * w.reciprocal(n);
        mp = mp * m;
    }

    HPolyMatrix d(order, f);
    for (std::size_t n = 0; n < order; ++n)
        for (std::size_t k = 0; k <= n; ++k) d(n, k) = Polynomial(std::move(coeffs[n][k]), f);
    return d;
}

inline bool commutes(const TriMatrix& a, const TriMatrix& b) { return a * b == b * a; }

/// Sheffer decided by Riordan membership.
inline bool is_sheffer(const TriMatrix& a, const Weight& w) { return is_riordan(a, w); }

/// Sheffer decided by [Q, T_h] = 0 for h = 0..N-1. When the field has fewer
/// than N elements those h are not distinct, and the h-coefficients
/// [Q, M^l] = 0 (l < N) are tested instead.
inline bool is_sheffer_by_commutators(const TriMatrix& a, const Weight& w) {
    detail::check_weight(a, w);
    if (!is_graded(a)) return false;
    const TriMatrix q = q_operator(a, w);
    const Field f = a.field();
    const std::size_t order = a.order();
    if (f.is_rational() || f.modulus() >= order) {
        for (std::size_t h = 0; h < order; ++h) {
            if (!commutes(q, translation_matrix(w, f.from_int(static_cast<long>(h))))) return false;
        }
        return true;
    }
    const TriMatrix m = m_matrix(w);
    TriMatrix mp = m;
    for (std::size_t l = 1; l < order; ++l) {
        if (!commutes(q, mp)) return false;
        mp = mp * m;
    }
    return true;
}

inline bool is_appell(const TriMatrix& a, const Weight& w) {
    detail::check_weight(a, w);
    return is_graded(a) && commutes(a, m_matrix(w));
}

inline bool is_binomial(const TriMatrix& a, const Weight& w) {
    if (!is_sheffer(a, w)) return false;
    for (std::size_t n = 0; n < a.order(); ++n) {
        if (!(n == 0 ? a(n, 0).is_one() : a(n, 0).is_zero())) return false;
    }
    return true;
}

/// alpha(M_W): entry (n,k) = c_{n-k} w_n / w_k, the matrix of the pair (alpha, y).
inline TriMatrix appell_from_alpha(const Series& alpha, const Weight& w) {
    detail::check_weight(alpha, w);
    if (alpha[0].is_zero()) throw Error(Errc::not_valuation_zero, "alpha must have a nonzero constant term");
    TriMatrix a(w.order(), w.field());
    for (std::size_t n = 0; n < w.order(); ++n)
        for (std::size_t k = 0; k <= n; ++k) a(n, k) = alpha[n - k] * w[n] * w.reciprocal(k);
    return a;
}

/// The series D_W multiplies sum p_n(x) y^n / w_n by; this is beta.
inline Series dw_multiplier(const TriMatrix& a, const Weight& w) {
    if (!is_sheffer(a, w)) throw Error(Errc::not_sheffer, "matrix is not Sheffer for this weight");
    return matrix_to_pair(a, w).beta;
}

/// A^{-1} B A is Appell for B = (1+y^j)(M_W), j = 1..N-1, and for `samples`
/// random Appell B drawn from `seed`.
inline bool is_normalizing(const TriMatrix& a, const Weight& w, std::size_t samples = 8, std::uint64_t seed = 1) {
    detail::check_weight(a, w);
    if (!is_graded(a)) return false;
    const std::size_t order = a.order();
    const Field f = a.field();
    const TriMatrix ainv = inverse(a);
    const TriMatrix m = m_matrix(w);
    auto conj_is_appell = [&](const Series& alpha) { return commutes(ainv * appell_from_alpha(alpha, w) * a, m); };

    for (std::size_t j = 1; j < order; ++j) {
        Series alpha = Series::one(order, f);
        alpha[j] = f.one();
        if (!conj_is_appell(alpha)) return false;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (std::size_t s = 0; s < samples; ++s) {
        Series alpha = Series::one(order, f);
        for (std::size_t j = 1; j < order; ++j) alpha[j] = f.from_int(coeff(rng));
        if (!conj_is_appell(alpha)) return false;
    }
    return true;
}

/// Strictly lower with a nowhere-vanishing subdiagonal.
inline bool is_degree_decreasing(const TriMatrix& m) {
    for (std::size_t n = 0; n < m.order(); ++n) {
        if (!m(n, n).is_zero()) return false;
        if (n > 0 && m(n, n - 1).is_zero()) return false;
    }
    return true;
}

/// The A in L with a_{n,0} = delta_{n,0} and A M_{geom(1)} = M A, built
/// column by column from a_{n,k+1} = sum_{l=k}^{n-1} m_{n,l} a_{l,k}.
inline TriMatrix solve_conjugator(const TriMatrix& m) {
    if (!is_degree_decreasing(m)) throw Error(Errc::not_degree_decreasing, "operator matrix is not degree decreasing");
    const std::size_t order = m.order();
    const Field f = m.field();
    TriMatrix a(order, f);
    a(0, 0) = f.one();
    for (std::size_t k = 0; k + 1 < order; ++k) {
        for (std::size_t n = k + 1; n < order; ++n) {
            Scalar acc = f.zero();
            for (std::size_t l = k; l < n; ++l) acc += m(n, l) * a(l, k);
            a(n, k + 1) = acc;
        }
    }
    return a;
}

/// Checks A M_{geom(1)} = M A with A graded, i.e. A M_{geom(1)} A^{-1} = M.
inline bool conjugates_to(const TriMatrix& a, const TriMatrix& m) {
    a.check(m);
    if (!is_graded(a)) return false;
    return a * m_matrix(Weight::geometric(a.field().one(), a.order())) == m * a;
}

/// Delta_a = T_{a,W} - I
inline TriMatrix finite_difference_matrix(const Weight& w, const Scalar& a) {
    if (a.is_zero()) throw Error(Errc::zero_shift, "finite difference needs a nonzero shift");
    return translation_matrix(w, a) - TriMatrix::identity(w.order(), w.field());
}

enum class CheckKind { riordan, sheffer, appell, binomial };

inline std::optional<CheckKind> parse_check_kind(std::string_view s) {
    if (s == "riordan") return CheckKind::riordan;
    if (s == "sheffer") return CheckKind::sheffer;
    if (s == "appell") return CheckKind::appell;
    if (s == "binomial") return CheckKind::binomial;
    return std::nullopt;
}

inline std::string_view check_kind_name(CheckKind k) {
    switch (k) {
    case CheckKind::riordan: return "riordan";
    case CheckKind::sheffer: return "sheffer";
    case CheckKind::appell: return "appell";
    case CheckKind::binomial: return "binomial";
    }
    return "?";
}

/// Classification verdict; the pair is attached whenever A is in R_W.
struct Verdict {
    CheckKind kind;
    bool value;
    std::optional<RiordanPair> pair;
};

inline Verdict classify(const TriMatrix& a, const Weight& w, CheckKind kind) {
    Verdict v{kind, false, std::nullopt};
    switch (kind) {
    case CheckKind::riordan: v.value = is_riordan(a, w); break;
    case CheckKind::sheffer: v.value = is_sheffer(a, w); break;
    case CheckKind::appell: v.value = is_appell(a, w); break;
    case CheckKind::binomial: v.value = is_binomial(a, w); break;
    }
    if (is_riordan(a, w)) v.pair = matrix_to_pair(a, w);
    return v;
}

}  // namespace riordan
