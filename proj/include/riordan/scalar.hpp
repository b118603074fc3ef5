#pragma once

// Field elements: exact rationals (GMP) or residues modulo a prime.
//
// Each Scalar carries its own backend tag, and for the modular backend its
// prime, so that arithmetic between values from different fields is caught
// at the point where it happens instead of silently wrapping around.

#include <riordan/error.hpp>

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace riordan {

class Scalar;

enum class Backend { rational, modular };

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 pow_mod(u64 base, u64 e, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline u64 inv_mod(u64 a, u64 p) {
    // extended Euclid on signed 128-bit to stay clear of overflow for p < 2^63
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<u64>(t);
}

inline u64 reduce_mpz(const mpz_class& z, u64 p) {
    const mpz_class modulus(static_cast<unsigned long>(p));
    mpz_class m = z % modulus;
    if (m < 0) m += modulus;
    return m.get_ui();
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline mpz_class parse_integer(std::string_view text) {
    text = trim(text);
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw Error(Errc::parse_error, "expected an integer, got '" + std::string(text) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(Errc::parse_error, "expected an integer, got '" + std::string(text) + "'");
    }
    std::string owned(text.front() == '+' ? text.substr(1) : text);
    return mpz_class(owned, 10);
}

}  // namespace detail

/// Which field a computation lives in: Q, or GF(p) for a prime p.
class Field {
public:
    static Field rational() { return Field(Backend::rational, 0); }

    static Field modular(std::uint64_t p) {
        if (p >= (1ULL << 62) || !detail::is_prime(p))
            throw Error(Errc::invalid_argument, "modulus " + std::to_string(p) + " is not a prime below 2^62");
        return Field(Backend::modular, p);
    }

    Backend backend() const noexcept { return backend_; }
    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    bool is_rational() const noexcept { return backend_ == Backend::rational; }

    /// Number of distinct elements, saturating for Q.
    std::uint64_t size_hint() const noexcept { return is_rational() ? UINT64_MAX : p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;
    Scalar from_fraction(std::int64_t num, std::int64_t den) const;

    std::string to_string() const { return is_rational() ? "rat" : "mod:" + std::to_string(p_); }

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    Field(Backend b, std::uint64_t p) : backend_(b), p_(p) {}

    Backend backend_;
    std::uint64_t p_;
};

class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}

    static Scalar rational(mpq_class q) {
        q.canonicalize();
        Scalar s;
        s.value_ = std::move(q);
        return s;
    }

    static Scalar modular(std::uint64_t residue, std::uint64_t p) {
        Scalar s;
        s.value_ = Mod{residue % p, p};
        return s;
    }

    Backend backend() const noexcept {
        return std::holds_alternative<mpq_class>(value_) ? Backend::rational : Backend::modular;
    }

    Field field() const {
        if (auto m = std::get_if<Mod>(&value_)) return Field(Backend::modular, m->p);
        return Field::rational();
    }

    bool is_zero() const {
        if (auto m = std::get_if<Mod>(&value_)) return m->r == 0;
        return sgn(std::get<mpq_class>(value_)) == 0;
    }

    bool is_one() const {
        if (auto m = std::get_if<Mod>(&value_)) return m->r == 1 % m->p;
        return std::get<mpq_class>(value_) == 1;
    }

    const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }
    std::uint64_t residue() const { return std::get<Mod>(value_).r; }
    std::uint64_t modulus() const { return std::get<Mod>(value_).p; }

    Scalar inverse() const {
        if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
        if (auto m = std::get_if<Mod>(&value_)) return modular(detail::inv_mod(m->r, m->p), m->p);
        return rational(1 / std::get<mpq_class>(value_));
    }

    Scalar operator-() const {
        if (auto m = std::get_if<Mod>(&value_)) return modular(m->r == 0 ? 0 : m->p - m->r, m->p);
        return rational(-std::get<mpq_class>(value_));
    }

    Scalar& operator+=(const Scalar& o) {
        if (auto m = std::get_if<Mod>(&value_)) {
            const u64 r = mod_of(o, m->p);
            m->r = m->r + r >= m->p ? m->r + r - m->p : m->r + r;
        } else {
            std::get<mpq_class>(value_) += rat_of(o);
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& o) {
        if (auto m = std::get_if<Mod>(&value_)) {
            const u64 r = mod_of(o, m->p);
            m->r = m->r >= r ? m->r - r : m->r + m->p - r;
        } else {
            std::get<mpq_class>(value_) -= rat_of(o);
        }
        return *this;
    }

    Scalar& operator*=(const Scalar& o) {
        if (auto m = std::get_if<Mod>(&value_)) {
            m->r = detail::mul_mod(m->r, mod_of(o, m->p), m->p);
        } else {
            std::get<mpq_class>(value_) *= rat_of(o);
        }
        return *this;
    }

    Scalar& operator/=(const Scalar& o) {
        if (o.backend() != backend() || (backend() == Backend::modular && o.modulus() != modulus()))
            throw Error(Errc::backend_mismatch, "cannot divide " + to_string() + " by " + o.to_string());
        if (o.is_zero()) throw Error(Errc::division_by_zero, to_string() + " / 0");
        return *this *= o.inverse();
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Values from different fields compare unequal rather than throwing.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.backend() != b.backend()) return false;
        if (a.backend() == Backend::modular) return a.modulus() == b.modulus() && a.residue() == b.residue();
        return a.as_rational() == b.as_rational();
    }

    /// Canonical text: "a", "a/b" or "r mod p".
    std::string to_string() const {
        if (auto m = std::get_if<Mod>(&value_)) return std::to_string(m->r) + " mod " + std::to_string(m->p);
        return std::get<mpq_class>(value_).get_str();
    }

    /// Text without the " mod p" suffix, for tables.
    std::string to_plain_string() const {
        if (auto m = std::get_if<Mod>(&value_)) return std::to_string(m->r);
        return std::get<mpq_class>(value_).get_str();
    }

private:
    using u64 = detail::u64;
    struct Mod {
        u64 r;
        u64 p;
    };

    u64 mod_of(const Scalar& o, u64 p) const {
        auto m = std::get_if<Mod>(&o.value_);
        if (!m || m->p != p) throw Error(Errc::backend_mismatch, to_string() + " combined with " + o.to_string());
        return m->r;
    }

    const mpq_class& rat_of(const Scalar& o) const {
        auto q = std::get_if<mpq_class>(&o.value_);
        if (!q) throw Error(Errc::backend_mismatch, to_string() + " combined with " + o.to_string());
        return *q;
    }

    std::variant<mpq_class, Mod> value_;
};

inline Scalar Field::zero() const { return from_int(0); }
inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_int(std::int64_t n) const {
    if (is_rational()) return Scalar::rational(mpq_class(static_cast<long>(n)));
    __int128 r = static_cast<__int128>(n) % static_cast<__int128>(p_);
    if (r < 0) r += p_;
    return Scalar::modular(static_cast<std::uint64_t>(r), p_);
}

inline Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
    return from_int(num) / from_int(den);
}

inline Scalar pow(Scalar base, std::uint64_t e) {
    Scalar r = base.field().one();
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Parses "a", "a/b" or "a mod p" into the given field. A bare integer or
/// fraction is mapped into the field; an explicit "mod p" must match it.
inline Scalar parse_scalar(std::string_view text, const Field& field) {
    std::string_view s = detail::trim(text);
    std::optional<std::uint64_t> explicit_p;
    if (auto pos = s.find("mod"); pos != std::string_view::npos) {
        mpz_class p = detail::parse_integer(s.substr(pos + 3));
        if (p <= 1 || p.get_str().size() > 19) throw Error(Errc::parse_error, "bad modulus in '" + std::string(s) + "'");
        explicit_p = std::stoull(p.get_str());
        s = detail::trim(s.substr(0, pos));
    }
    mpz_class num, den = 1;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = detail::parse_integer(s.substr(0, slash));
        den = detail::parse_integer(s.substr(slash + 1));
    } else {
        num = detail::parse_integer(s);
    }
    if (den == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");

    if (explicit_p) {
        if (field.is_rational() || field.modulus() != *explicit_p)
            throw Error(Errc::backend_mismatch, "'" + std::string(text) + "' is not an element of " + field.to_string());
    }
    if (field.is_rational()) return Scalar::rational(mpq_class(num, den));
    const auto p = field.modulus();
    Scalar n = Scalar::modular(detail::reduce_mpz(num, p), p);
    Scalar d = Scalar::modular(detail::reduce_mpz(den, p), p);
    return n / d;
}

/// Parses with the field inferred from the text ("a mod p" => GF(p), else Q).
inline Scalar parse_scalar(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (auto pos = s.find("mod"); pos != std::string_view::npos) {
        mpz_class p = detail::parse_integer(s.substr(pos + 3));
        if (p <= 1 || p.get_str().size() > 19) throw Error(Errc::parse_error, "bad modulus in '" + std::string(s) + "'");
        return parse_scalar(text, Field::modular(std::stoull(p.get_str())));
    }
    return parse_scalar(text, Field::rational());
}

// ---------------------------------------------------------------------------
// Binomial-type coefficients

/// 1/n! in the field of `field`; NotInvertible when the characteristic divides n!.
inline Scalar factorial_inv(std::uint64_t n, const Field& field) {
    if (!field.is_rational() && n >= field.modulus())
        throw Error(Errc::not_invertible, std::to_string(n) + "! vanishes in characteristic " +
                                              std::to_string(field.modulus()));
    Scalar f = field.one();
    for (std::uint64_t j = 2; j <= n; ++j) f *= field.from_int(static_cast<std::int64_t>(j));
    return f.inverse();
}

/// binom(xi, n) = (1/n!) * prod_{j<n} (xi - j).
inline Scalar extended_binomial(const Scalar& xi, std::uint64_t n) {
    const Field field = xi.field();
    Scalar r = factorial_inv(n, field);
    for (std::uint64_t j = 0; j < n; ++j) r *= xi - field.from_int(static_cast<std::int64_t>(j));
    return r;
}

/// Gaussian binomial prod_{j=k+1}^{l}(1-q^j) / prod_{j=1}^{l-k}(1-q^j).
inline Scalar q_binomial(std::uint64_t l, std::uint64_t k, const Scalar& q) {
    if (k > l) throw Error(Errc::invalid_argument, "q_binomial needs k <= l");
    const Field field = q.field();
    const Scalar one = field.one();
    Scalar num = one, den = one;
    for (std::uint64_t j = k + 1; j <= l; ++j) num *= one - pow(q, j);
    for (std::uint64_t j = 1; j <= l - k; ++j) {
        Scalar factor = one - pow(q, j);
        if (factor.is_zero())
            throw Error(Errc::root_of_unity, "q^" + std::to_string(j) + " = 1 for q = " + q.to_string());
        den *= factor;
    }
    return num / den;
}

}  // namespace riordan
