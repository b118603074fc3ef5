#pragma once

// Truncated formal power series c_0 + c_1 y + ... + c_{N-1} y^{N-1}.
//
// All arithmetic is exact modulo y^N. Composition and compositional
// inversion require an inner series without constant term, which is what
// keeps them exact at the truncation order.

#include <riordan/scalar.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace riordan {

class Series {
public:
    explicit Series(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error(Errc::invalid_argument, "series needs at least one coefficient");
        const Field f = c_.front().field();
        for (const auto& x : c_) {
            if (x.field() != f) throw Error(Errc::backend_mismatch, "series coefficients from different fields");
        }
    }

    static Series zero(std::size_t order, const Field& field) {
        return Series(std::vector<Scalar>(order, field.zero()));
    }

    static Series one(std::size_t order, const Field& field) { return monomial(order, 0, field.one()); }

    /// coeff * y^k (zero when k >= order).
    static Series monomial(std::size_t order, std::size_t k, const Scalar& coeff) {
        Series s = zero(order, coeff.field());
        if (k < order) s.c_[k] = coeff;
        return s;
    }

    /// Zero-padded (or truncated) to the given order.
    static Series from_coefficients(std::vector<Scalar> coeffs, std::size_t order, const Field& field) {
        coeffs.resize(order, field.zero());
        return Series(std::move(coeffs));
    }

    std::size_t order() const noexcept { return c_.size(); }
    Field field() const { return c_.front().field(); }
    const Scalar& operator[](std::size_t n) const { return c_[n]; }
    Scalar& operator[](std::size_t n) { return c_[n]; }
    std::span<const Scalar> coefficients() const noexcept { return c_; }

    /// Least n with c_n != 0; nullopt stands for "infinite", i.e. zero
    /// through the truncation order (the true valuation may be >= N).
    std::optional<std::size_t> valuation() const {
        for (std::size_t n = 0; n < c_.size(); ++n) {
            if (!c_[n].is_zero()) return n;
        }
        return std::nullopt;
    }

    bool is_zero() const { return !valuation().has_value(); }

    Series& operator+=(const Series& o) {
        check_order(o);
        for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
        return *this;
    }

    Series& operator-=(const Series& o) {
        check_order(o);
        for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
        return *this;
    }

    Series& operator*=(const Scalar& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Scalar& s) { return a *= s; }
    friend Series operator*(const Scalar& s, Series a) { return a *= s; }

    friend Series operator-(Series a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    /// Cauchy product truncated to N terms.
    friend Series operator*(const Series& a, const Series& b) {
        a.check_order(b);
        const std::size_t n_terms = a.order();
        Series r = zero(n_terms, a.field());
        for (std::size_t i = 0; i < n_terms; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n_terms; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend bool operator==(const Series&, const Series&) = default;

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t n = 0; n < c_.size(); ++n) {
            if (n) out += ", ";
            out += c_[n].to_string();
        }
        return out + "]";
    }

private:
    void check_order(const Series& o) const {
        if (o.order() != order())
            throw Error(Errc::order_mismatch,
                        "series orders " + std::to_string(order()) + " and " + std::to_string(o.order()));
    }

    std::vector<Scalar> c_;
};

/// The series y (identity for composition).
inline Series identity_series(std::size_t order, const Field& field) { return Series::monomial(order, 1, field.one()); }

/// Multiplicative inverse; requires a nonzero constant term.
inline Series inverse(const Series& s) {
    if (s[0].is_zero()) throw Error(Errc::not_invertible, "series with zero constant term has no inverse");
    const std::size_t n_terms = s.order();
    Series t = Series::zero(n_terms, s.field());
    const Scalar inv0 = s[0].inverse();
    t[0] = inv0;
    for (std::size_t n = 1; n < n_terms; ++n) {
        Scalar acc = s.field().zero();
        for (std::size_t k = 1; k <= n; ++k) {
            if (!s[k].is_zero()) acc += s[k] * t[n - k];
        }
        t[n] = -(acc * inv0);
    }
    return t;
}

inline Series divide(const Series& num, const Series& den) { return num * inverse(den); }

inline Series power(const Series& s, std::size_t k) {
    Series r = Series::one(s.order(), s.field());
    for (std::size_t i = 0; i < k; ++i) r = r * s;
    return r;
}

/// outer(inner(y)) by Horner's rule; inner must have no constant term.
inline Series compose(const Series& outer, const Series& inner) {
    if (!inner[0].is_zero()) throw Error(Errc::inner_valuation_zero, "inner series has a nonzero constant term");
    if (outer.order() != inner.order()) throw Error(Errc::order_mismatch, "compose: orders differ");
    const std::size_t n_terms = outer.order();
    Series r = Series::monomial(n_terms, 0, outer[n_terms - 1]);
    for (std::size_t i = n_terms - 1; i-- > 0;) {
        r = r * inner;
        r[0] += outer[i];
    }
    return r;
}

/// The series b' with b(b'(y)) = b'(b(y)) = y, for b of valuation exactly one.
///
/// Solved degree by degree: [y^n] b(b') = b_1 b'_n + sum_{j>=2} b_j [y^n] b'^j,
/// and [y^n] b'^j for j >= 2 only involves b'_1..b'_{n-1}.
inline Series compositional_inverse(const Series& b) {
    const std::size_t n_terms = b.order();
    if (!b[0].is_zero() || n_terms < 2 || b[1].is_zero())
        throw Error(Errc::not_valuation_one, "compositional inverse needs valuation exactly 1");
    const Field field = b.field();
    const Scalar inv1 = b[1].inverse();

    // powers[j][m] = [y^m] (b')^j, filled in as degrees become known
    std::vector<std::vector<Scalar>> powers(n_terms, std::vector<Scalar>(n_terms, field.zero()));
    powers[1][1] = inv1;
    for (std::size_t j = 2; j < n_terms; ++j) powers[j][j] = powers[j - 1][j - 1] * inv1;

    for (std::size_t n = 2; n < n_terms; ++n) {
        for (std::size_t j = 2; j < n; ++j) {
            Scalar acc = field.zero();
            for (std::size_t i = 1; i + j - 1 <= n; ++i) acc += powers[j - 1][n - i] * powers[1][i];
            powers[j][n] = acc;
        }
        Scalar acc = field.zero();
        for (std::size_t j = 2; j <= n; ++j) acc += b[j] * powers[j][n];
        powers[1][n] = -(acc * inv1);
    }
    return Series(std::move(powers[1]));
}

}  // namespace riordan
