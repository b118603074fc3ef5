#pragma once

// When is the W-Appell matrix of alpha also Riordan for a second weight W2?
// The answer is governed by gamma_k = w2_k w_{k+1} / (w2_{k+1} w_k).

#include <riordan/operators.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace riordan {

using GammaSeq = std::vector<Scalar>;

/// gamma_0 .. gamma_{N-2}
inline GammaSeq gamma_sequence(const Weight& w, const Weight& w2) {
    if (w.field() != w2.field()) throw Error(Errc::backend_mismatch, "weights over different fields");
    if (w.order() != w2.order()) throw Error(Errc::order_mismatch, "weight orders differ");
    GammaSeq g;
    for (std::size_t k = 0; k + 1 < w.order(); ++k) g.push_back(w2[k] * w[k + 1] * w2.reciprocal(k + 1) * w.reciprocal(k));
    return g;
}

enum class GammaKind { constant, linear, neither };

struct GammaClass {
    GammaKind kind;
    std::optional<Scalar> lambda;  // gamma_k = lambda - sigma k in the linear case
    std::optional<Scalar> sigma;
};

/// The linear case is reported only in characteristic 0.
inline GammaClass classify_gamma(const GammaSeq& g, std::uint64_t characteristic) {
    bool constant = true;
    for (const auto& x : g) constant = constant && x == g.front();
    if (g.empty() || constant) return {GammaKind::constant, std::nullopt, std::nullopt};
    if (characteristic != 0 || g.size() < 2) return {GammaKind::neither, std::nullopt, std::nullopt};
    const Field f = g.front().field();
    const Scalar lambda = g[0];
    const Scalar sigma = g[0] - g[1];
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] != lambda - sigma * f.from_int(static_cast<long>(k))) return {GammaKind::neither, std::nullopt, std::nullopt};
    }
    return {GammaKind::linear, lambda, sigma};
}

struct ExponentialAlpha {
    Scalar c0;
    Scalar h;
};

/// Some(c0, h) iff c_l = c0 h^l / l! for l < terms (default: every stored coefficient).
inline std::optional<ExponentialAlpha> is_exponential_alpha(const Series& alpha, std::optional<std::size_t> terms = {}) {
    if (alpha[0].is_zero()) throw Error(Errc::not_valuation_zero, "alpha must have a nonzero constant term");
    const std::size_t count = std::min(terms.value_or(alpha.order()), alpha.order());
    const Field f = alpha.field();
    if (!f.is_rational() && count > f.modulus())
        throw Error(Errc::char_p, "factorials up to " + std::to_string(count - 1) + " vanish in characteristic " +
                                      std::to_string(f.modulus()));
    const Scalar c0 = alpha[0];
    const Scalar h = alpha.order() > 1 ? alpha[1] / c0 : f.zero();
    Scalar expect = c0;
    for (std::size_t l = 0; l < count; ++l) {
        if (l > 0) expect *= h / f.from_int(static_cast<long>(l));
        if (alpha[l] != expect) return std::nullopt;
    }
    return ExponentialAlpha{c0, h};
}

/// w2_0 = 1, w2_{k+1} = w2_k w_{k+1} / (w_k gamma_k)
inline Weight tilde_weight_from_gamma(const Weight& w, const GammaSeq& g) {
    if (g.size() + 1 != w.order()) throw Error(Errc::order_mismatch, "gamma sequence must have N-1 entries");
    std::vector<Scalar> out{w.field().one()};
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k].is_zero()) throw Error(Errc::invalid_argument, "gamma_" + std::to_string(k) + " is zero");
        out.push_back(out.back() * w[k + 1] * w.reciprocal(k) / g[k]);
    }
    return Weight(std::move(out));
}

/// The weight of (1 + sigma t)^{lambda/sigma}: 1/w_k = sigma^k binom(lambda/sigma, k).
inline Weight exp_case_weights(const Scalar& lambda, const Scalar& sigma, std::size_t order) {
    if (lambda.field() != sigma.field()) throw Error(Errc::backend_mismatch, "lambda and sigma from different fields");
    if (!lambda.field().is_rational()) throw Error(Errc::char_p, "the exponential two-weight case needs characteristic 0");
    if (sigma.is_zero()) throw Error(Errc::invalid_argument, "sigma must be nonzero");
    const Scalar mu = lambda / sigma;
    std::vector<Scalar> w;
    Scalar sk = lambda.field().one();
    for (std::size_t k = 0; k < order; ++k) {
        Scalar inv = sk * extended_binomial(mu, k);
        if (inv.is_zero())
            throw Error(Errc::forbidden_lambda, "lambda/sigma = " + mu.to_string() + " makes w_" + std::to_string(k) + " vanish");
        w.push_back(inv.inverse());
        sk *= sigma;
    }
    return Weight(std::move(w));
}

enum class AppShefCase { member_case_i, member_case_ii, member_other, not_member };

inline std::optional<std::string_view> appshef_case_label(AppShefCase c) {
    switch (c) {
    case AppShefCase::member_case_i: return "I";
    case AppShefCase::member_case_ii: return "II";
    case AppShefCase::member_other: return "other";
    case AppShefCase::not_member: return std::nullopt;
    }
    return std::nullopt;
}

struct AppShefResult {
    bool member;
    AppShefCase label;
    GammaSeq gamma;
};

/// Membership comes from the direct Riordan check under W2; the label is
/// diagnostic. The exponential shape of alpha is tested on c_0..c_{N-3},
/// the coefficients membership actually constrains at order N.
inline AppShefResult appshef_classify(const Series& alpha, const Weight& w, const Weight& w2) {
    GammaSeq g = gamma_sequence(w, w2);
    const bool member = is_riordan(appell_from_alpha(alpha, w), w2);
    if (!member) return {false, AppShefCase::not_member, std::move(g)};
    const GammaClass cls = classify_gamma(g, w.field().characteristic());
    AppShefCase label = AppShefCase::member_other;
    if (cls.kind == GammaKind::constant) {
        label = AppShefCase::member_case_i;
    } else if (cls.kind == GammaKind::linear) {
        const std::size_t terms = alpha.order() >= 2 ? alpha.order() - 2 : alpha.order();
        if (is_exponential_alpha(alpha, terms)) label = AppShefCase::member_case_ii;
    }
    return {true, label, std::move(g)};
}

}  // namespace riordan
