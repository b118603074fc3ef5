#pragma once

// Polynomials and N x N lower-triangular matrices. Row n of a matrix holds
// the coefficients of p_n(x), so a graded sequence and an element of L are
// the same object.

#include <riordan/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace riordan {

class Polynomial {
public:
    explicit Polynomial(const Field& field) : field_(field) {}

    Polynomial(std::vector<Scalar> coeffs, const Field& field) : field_(field), c_(std::move(coeffs)) {
        for (const auto& x : c_) {
            if (x.field() != field_) throw Error(Errc::backend_mismatch, "polynomial coefficient from another field");
        }
        trim();
    }

    static Polynomial monomial(std::size_t n, const Field& field) {
        std::vector<Scalar> c(n + 1, field.zero());
        c[n] = field.one();
        return Polynomial(std::move(c), field);
    }

    const Field& field() const noexcept { return field_; }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    /// Coefficient of x^k (zero beyond the degree).
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
    std::span<const Scalar> coefficients() const noexcept { return c_; }

    Scalar operator()(const Scalar& x) const {
        Scalar acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(c), a.field_);
    }

    friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
        std::vector<Scalar> c(p.c_);
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c), p.field_);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c), a.field_);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    /// Highest degree first unless `ascending`.
    std::string to_string(const std::string& var = "x", bool ascending = false) const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            const std::size_t i = ascending ? j : c_.size() - 1 - j;
            const Scalar& a = c_[i];
            if (a.is_zero()) continue;
            std::string s = a.to_string();
            bool neg = field_.is_rational() && s.front() == '-';
            if (neg) s.erase(0, 1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (i == 0) {
                out += s;
                continue;
            }
            if (s != "1") out += (s.find_first_of("/ ") != std::string::npos ? "(" + s + ")" : s) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Field field_;
    std::vector<Scalar> c_;
};

class TriMatrix {
public:
    TriMatrix(std::size_t order, const Field& field)
        : n_(order), field_(field), a_(order * (order + 1) / 2, field.zero()) {
        if (order == 0) throw Error(Errc::invalid_argument, "matrix order must be positive");
    }

    static TriMatrix identity(std::size_t order, const Field& field) {
        TriMatrix m(order, field);
        for (std::size_t n = 0; n < order; ++n) m(n, n) = field.one();
        return m;
    }

    static TriMatrix diagonal(const std::vector<Scalar>& d) {
        if (d.empty()) throw Error(Errc::invalid_argument, "empty diagonal");
        TriMatrix m(d.size(), d.front().field());
        for (std::size_t n = 0; n < d.size(); ++n) m.set(n, n, d[n]);
        return m;
    }

    /// Row n must have exactly n+1 entries.
    static TriMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& field) {
        TriMatrix m(rows.size(), field);
        for (std::size_t n = 0; n < rows.size(); ++n) {
            if (rows[n].size() != n + 1)
                throw Error(Errc::invalid_argument, "row " + std::to_string(n) + " needs " + std::to_string(n + 1) + " entries");
            for (std::size_t k = 0; k <= n; ++k) m.set(n, k, rows[n][k]);
        }
        return m;
    }

    std::size_t order() const noexcept { return n_; }
    const Field& field() const noexcept { return field_; }

    Scalar& operator()(std::size_t n, std::size_t k) { return a_[index(n, k)]; }
    const Scalar& operator()(std::size_t n, std::size_t k) const { return a_[index(n, k)]; }

    /// Zero above the diagonal.
    Scalar at(std::size_t n, std::size_t k) const { return k > n ? field_.zero() : (*this)(n, k); }

    void set(std::size_t n, std::size_t k, const Scalar& v) {
        if (v.field() != field_) throw Error(Errc::backend_mismatch, "matrix entry from another field");
        (*this)(n, k) = v;
    }

    std::vector<Scalar> row(std::size_t n) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(n * (n + 1) / 2),
                a_.begin() + static_cast<std::ptrdiff_t>(n * (n + 1) / 2 + n + 1)};
    }

    TriMatrix& operator+=(const TriMatrix& o) {
        check(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    TriMatrix& operator-=(const TriMatrix& o) {
        check(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }

    TriMatrix& operator*=(const Scalar& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend TriMatrix operator+(TriMatrix a, const TriMatrix& b) { return a += b; }
    friend TriMatrix operator-(TriMatrix a, const TriMatrix& b) { return a -= b; }
    friend TriMatrix operator*(const Scalar& s, TriMatrix a) { return a *= s; }

    friend TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
        a.check(b);
        TriMatrix r(a.n_, a.field_);
        for (std::size_t n = 0; n < a.n_; ++n) {
            for (std::size_t l = 0; l <= n; ++l) {
                const Scalar& x = a(n, l);
                if (x.is_zero()) continue;
                for (std::size_t k = 0; k <= l; ++k) {
                    if (!b(l, k).is_zero()) r(n, k) += x * b(l, k);
                }
            }
        }
        return r;
    }

    friend bool operator==(const TriMatrix& a, const TriMatrix& b) {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.a_ == b.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    void check(const TriMatrix& o) const {
        if (o.field_ != field_) throw Error(Errc::backend_mismatch, "matrices over different fields");
        if (o.n_ != n_)
            throw Error(Errc::order_mismatch, "matrix orders " + std::to_string(n_) + " and " + std::to_string(o.n_));
    }

private:
    static std::size_t index(std::size_t n, std::size_t k) noexcept { return n * (n + 1) / 2 + k; }

    std::size_t n_;
    Field field_;
    std::vector<Scalar> a_;
};

inline bool is_graded(const TriMatrix& a) {
    for (std::size_t n = 0; n < a.order(); ++n)
        if (a(n, n).is_zero()) return false;
    return true;
}

inline void require_graded(const TriMatrix& a) {
    for (std::size_t n = 0; n < a.order(); ++n)
        if (a(n, n).is_zero()) throw Error(Errc::singular_diagonal, "diagonal entry " + std::to_string(n) + " is zero");
}

/// Forward substitution, one column at a time.
inline TriMatrix inverse(const TriMatrix& a) {
    require_graded(a);
    const std::size_t order = a.order();
    TriMatrix b(order, a.field());
    std::vector<Scalar> diag_inv;
    diag_inv.reserve(order);
    for (std::size_t n = 0; n < order; ++n) diag_inv.push_back(a(n, n).inverse());
    for (std::size_t k = 0; k < order; ++k) {
        b(k, k) = diag_inv[k];
        for (std::size_t n = k + 1; n < order; ++n) {
            Scalar acc = a.field().zero();
            for (std::size_t l = k; l < n; ++l) {
                if (!a(n, l).is_zero()) acc += a(n, l) * b(l, k);
            }
            b(n, k) = -(acc * diag_inv[n]);
        }
    }
    return b;
}

inline std::vector<Polynomial> matrix_to_polys(const TriMatrix& a) {
    std::vector<Polynomial> ps;
    ps.reserve(a.order());
    for (std::size_t n = 0; n < a.order(); ++n) ps.emplace_back(a.row(n), a.field());
    return ps;
}

inline TriMatrix polys_to_matrix(const std::vector<Polynomial>& ps, const Field& field) {
    TriMatrix m(ps.size(), field);
    for (std::size_t n = 0; n < ps.size(); ++n) {
        if (ps[n].field() != field) throw Error(Errc::backend_mismatch, "polynomial from another field");
        if (ps[n].degree() > static_cast<long>(n))
            throw Error(Errc::degree_too_high,
                        "p_" + std::to_string(n) + " has degree " + std::to_string(ps[n].degree()));
        for (std::size_t k = 0; k <= n; ++k) m(n, k) = ps[n].coeff(k);
    }
    return m;
}

/// r_n = sum_k [x^k]p_n * q_k, computed on the polynomials themselves.
inline std::vector<Polynomial> umbral_compose(const std::vector<Polynomial>& ps, const std::vector<Polynomial>& qs) {
    if (ps.size() != qs.size()) throw Error(Errc::order_mismatch, "umbral_compose: list lengths differ");
    if (ps.empty()) return {};
    const Field field = ps.front().field();
    for (std::size_t n = 0; n < ps.size(); ++n) {
        if (ps[n].degree() > static_cast<long>(n) || qs[n].degree() > static_cast<long>(n))
            throw Error(Errc::degree_too_high, "umbral_compose: entry " + std::to_string(n) + " exceeds its index");
    }
    std::vector<Polynomial> rs;
    rs.reserve(ps.size());
    for (const auto& p : ps) {
        Polynomial r(field);
        for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
            if (!p.coeff(k).is_zero()) r = r + p.coeff(k) * qs[k];
        }
        rs.push_back(std::move(r));
    }
    return rs;
}

/// Linear extension of x^n -> sum_k S_{n,k} x^k.
inline Polynomial apply(const TriMatrix& s, const Polynomial& p) {
    if (p.degree() >= static_cast<long>(s.order()))
        throw Error(Errc::degree_too_high, "polynomial degree exceeds the truncation order");
    std::vector<Scalar> out(s.order(), s.field().zero());
    for (std::size_t n = 0; n < p.coefficients().size(); ++n) {
        const Scalar& c = p.coeff(n);
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k <= n; ++k) out[k] += c * s(n, k);
    }
    return Polynomial(std::move(out), s.field());
}

}  // namespace riordan
