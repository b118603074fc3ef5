#pragma once

#include <riordan.hpp>

#include <cstddef>
#include <random>

namespace gen {

using Rng = std::mt19937_64;
using riordan::Field;
using riordan::Scalar;

/// Small integers, and over Q occasionally a fraction with denominator up to 4.
inline Scalar scalar(Rng& rng, const Field& f, int bound = 4) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> coin(0, 3);
    if (f.is_rational() && coin(rng) == 0) return f.from_fraction(num(rng), den(rng));
    return f.from_int(num(rng));
}

inline Scalar nonzero(Rng& rng, const Field& f, int bound = 4) {
    for (;;) {
        Scalar s = scalar(rng, f, bound);
        if (!s.is_zero()) return s;
    }
}

inline riordan::Series series(Rng& rng, std::size_t order, const Field& f) {
    riordan::Series s = riordan::Series::zero(order, f);
    for (std::size_t n = 0; n < order; ++n) s[n] = scalar(rng, f);
    return s;
}

inline riordan::Series unit_series(Rng& rng, std::size_t order, const Field& f) {
    riordan::Series s = series(rng, order, f);
    s[0] = nonzero(rng, f);
    return s;
}

inline riordan::RiordanPair pair(Rng& rng, std::size_t order, const Field& f) {
    riordan::Series beta = series(rng, order, f);
    beta[0] = f.zero();
    beta[1] = nonzero(rng, f);
    return {unit_series(rng, order, f), beta};
}

inline riordan::TriMatrix graded(Rng& rng, std::size_t order, const Field& f) {
    riordan::TriMatrix a(order, f);
    for (std::size_t n = 0; n < order; ++n) {
        for (std::size_t k = 0; k < n; ++k) a(n, k) = scalar(rng, f);
        a(n, n) = nonzero(rng, f);
    }
    return a;
}

/// w_0 = 1, then small nonzero values.
inline riordan::Weight weight(Rng& rng, std::size_t order, const Field& f) {
    std::vector<Scalar> w{f.one()};
    for (std::size_t n = 1; n < order; ++n) w.push_back(nonzero(rng, f, 6));
    return riordan::Weight(std::move(w));
}

/// Adds a nonzero amount to one entry strictly below the diagonal in a
/// column k >= 2. Those columns are fully determined by (alpha, beta), so a
/// Riordan input stops being Riordan. Needs order >= 4.
inline riordan::TriMatrix perturb(Rng& rng, riordan::TriMatrix a) {
    const std::size_t order = a.order();
    std::uniform_int_distribution<std::size_t> col(2, order - 2);
    const std::size_t k = col(rng);
    std::uniform_int_distribution<std::size_t> row(k + 1, order - 1);
    const std::size_t n = row(rng);
    a(n, k) += nonzero(rng, a.field());
    return a;
}

}  // namespace gen
