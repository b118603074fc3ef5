#pragma once

// Linear functionals on F[x], stored through their values t_n = phi(x^n / w_n).
// In that basis the weighted product is the Cauchy product of series.

#include <riordan/operators.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace riordan {

struct Functional {
    Series t;

    explicit Functional(Series values) : t(std::move(values)) {}

    static Functional zero(std::size_t order, const Field& f) { return Functional(Series::zero(order, f)); }

    std::size_t order() const noexcept { return t.order(); }
    std::optional<std::size_t> valuation() const { return t.valuation(); }

    friend bool operator==(const Functional&, const Functional&) = default;
};

namespace detail {

inline void check_weight(const Functional& phi, const Weight& w) { check_weight(phi.t, w); }

}  // namespace detail

/// phi(p) = sum_n [x^n]p * w_n * t_n
inline Scalar apply(const Functional& phi, const Polynomial& p, const Weight& w) {
    detail::check_weight(phi, w);
    if (p.degree() >= static_cast<long>(w.order()))
        throw Error(Errc::degree_too_high, "polynomial degree exceeds the truncation order");
    Scalar acc = w.field().zero();
    for (std::size_t n = 0; n < p.coefficients().size(); ++n) acc += p.coeff(n) * w[n] * phi.t[n];
    return acc;
}

/// epsilon_h, t_n = h^n / w_n; its series is W(hy).
inline Functional eval_functional(const Scalar& h, const Weight& w) {
    Series t = Series::zero(w.order(), w.field());
    Scalar hn = w.field().one();
    for (std::size_t n = 0; n < w.order(); ++n) {
        t[n] = hn * w.reciprocal(n);
        hn *= h;
    }
    return Functional(std::move(t));
}

inline Functional functional_mul(const Functional& phi, const Functional& psi, const Weight& w) {
    detail::check_weight(phi, w);
    detail::check_weight(psi, w);
    return Functional(phi.t * psi.t);
}

/// psi = epsilon_0 o S, defined when S commutes with M_W.
inline Functional functional_of_operator(const TriMatrix& s, const Weight& w) {
    detail::check_weight(s, w);
    if (!commutes(s, m_matrix(w))) throw Error(Errc::not_commuting, "operator does not commute with D_W");
    Series t = Series::zero(s.order(), s.field());
    for (std::size_t n = 0; n < s.order(); ++n) t[n] = s(n, 0) * w.reciprocal(n);
    return Functional(std::move(t));
}

/// phi o S
inline Functional compose(const Functional& phi, const TriMatrix& s, const Weight& w) {
    detail::check_weight(phi, w);
    detail::check_weight(s, w);
    Series t = Series::zero(s.order(), s.field());
    for (std::size_t n = 0; n < s.order(); ++n) {
        Scalar acc = s.field().zero();
        for (std::size_t k = 0; k <= n; ++k) acc += s(n, k) * w[k] * phi.t[k];
        t[n] = acc * w.reciprocal(n);
    }
    return Functional(std::move(t));
}

/// phi_r(p_n / w_n) = delta_{n,r}; phi_r has t_k = (A^{-1})_{k,r} w_r / w_k.
inline std::vector<Functional> dual_basis(const TriMatrix& a, const Weight& w) {
    detail::check_weight(a, w);
    const TriMatrix ainv = inverse(a);
    std::vector<Functional> out;
    out.reserve(a.order());
    for (std::size_t r = 0; r < a.order(); ++r) {
        Series t = Series::zero(a.order(), a.field());
        for (std::size_t k = r; k < a.order(); ++k) t[k] = ainv(k, r) * w[r] * w.reciprocal(k);
        out.emplace_back(std::move(t));
    }
    return out;
}

struct GeometricDual {
    Functional xi;
    Functional eta;
};

/// Some(xi, eta) iff phi_r = xi eta^r for every r, with xi = phi_0, eta = phi_1 / phi_0.
inline std::optional<GeometricDual> check_geometric_dual(const std::vector<Functional>& phis, const Weight& w) {
    if (phis.empty()) throw Error(Errc::invalid_argument, "empty functional list");
    if (phis[0].t[0].is_zero()) throw Error(Errc::not_valuation_zero, "phi_0 must have valuation 0");
    for (const auto& phi : phis) detail::check_weight(phi, w);
    const Series& xi = phis[0].t;
    Series eta = phis.size() > 1 ? divide(phis[1].t, xi) : identity_series(w.order(), w.field());
    Series expect = xi;
    for (std::size_t r = 0; r < phis.size(); ++r) {
        if (phis[r].t != expect) return std::nullopt;
        expect = expect * eta;
    }
    return GeometricDual{Functional(xi), Functional(std::move(eta))};
}

/// The W-binomial sequence with the same beta.
inline TriMatrix binomial_associate(const TriMatrix& a, const Weight& w) {
    if (!is_sheffer(a, w)) throw Error(Errc::not_sheffer, "matrix is not Sheffer for this weight");
    return pair_to_matrix(RiordanPair(Series::one(a.order(), a.field()), matrix_to_pair(a, w).beta), w);
}

/// (phi psi)(p_n/w_n) = sum_k phi(p_k/w_k) psi(d_{n-k}/w_{n-k}) for all n < N,
/// with d the binomial sequence of beta = w_1 C_1 / C_0 (which is
/// binomial_associate(A) whenever A is Sheffer).
inline bool product_rule_check(const TriMatrix& a, const Weight& w, const Functional& phi, const Functional& psi) {
    detail::check_weight(a, w);
    require_graded(a);
    const std::size_t order = a.order();
    const Field f = a.field();
    const Series beta = divide(w[1] * column_series(a, w, 1), column_series(a, w, 0));
    const TriMatrix d = pair_to_matrix(RiordanPair(Series::one(order, f), beta), w);

    const auto ps = matrix_to_polys(a);
    const auto ds = matrix_to_polys(d);
    const Functional prod = functional_mul(phi, psi, w);
    std::vector<Scalar> phi_p, psi_d;
    for (std::size_t n = 0; n < order; ++n) {
        phi_p.push_back(apply(phi, ps[n], w) * w.reciprocal(n));
        psi_d.push_back(apply(psi, ds[n], w) * w.reciprocal(n));
    }
    for (std::size_t n = 0; n < order; ++n) {
        Scalar rhs = f.zero();
        for (std::size_t k = 0; k <= n; ++k) rhs += phi_p[k] * psi_d[n - k];
        if (apply(prod, ps[n], w) * w.reciprocal(n) != rhs) return false;
    }
    return true;
}

/// phi_r applied in x to sum_n p_n(x) y^n / w_n gives y^r, for every r.
inline bool dual_characterization_check(const TriMatrix& a, const Weight& w, const std::vector<Functional>& phis) {
    detail::check_weight(a, w);
    if (phis.size() != a.order()) return false;
    const auto ps = matrix_to_polys(a);
    for (std::size_t r = 0; r < phis.size(); ++r) {
        for (std::size_t n = 0; n < a.order(); ++n) {
            Scalar v = apply(phis[r], ps[n], w) * w.reciprocal(n);
            if (!(n == r ? v.is_one() : v.is_zero())) return false;
        }
    }
    return true;
}

inline bool dual_characterization_check(const TriMatrix& a, const Weight& w) {
    return dual_characterization_check(a, w, dual_basis(a, w));
}

}  // namespace riordan
