#pragma once

// JSON forms. Scalars are strings ("3/4", "5 mod 7"), everything else is
// built from arrays of scalar strings.

#include <riordan/functionals.hpp>
#include <riordan/twoweight.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace riordan {

using json = nlohmann::json;

inline void to_json(json& j, const Scalar& s) { j = s.to_string(); }

inline void to_json(json& j, const Series& s) {
    j = json::array();
    for (const auto& c : s.coefficients()) j.push_back(c.to_string());
}

inline void to_json(json& j, const Polynomial& p) {
    j = json::array();
    for (const auto& c : p.coefficients()) j.push_back(c.to_string());
}

inline void to_json(json& j, const TriMatrix& a) {
    j = json::array();
    for (std::size_t n = 0; n < a.order(); ++n) {
        json row = json::array();
        for (std::size_t k = 0; k <= n; ++k) row.push_back(a(n, k).to_string());
        j.push_back(std::move(row));
    }
}

inline void to_json(json& j, const Weight& w) {
    json arr = json::array();
    for (const auto& x : w.values()) arr.push_back(x.to_string());
    j = json{{"w", std::move(arr)}};
}

inline void to_json(json& j, const RiordanPair& p) { j = json{{"alpha", p.alpha}, {"beta", p.beta}}; }

inline void to_json(json& j, const Functional& phi) { j = json{{"t", phi.t}}; }

inline void to_json(json& j, const HPolyMatrix& d) {
    j = json::array();
    for (std::size_t n = 0; n < d.order(); ++n) {
        json row = json::array();
        for (std::size_t k = 0; k <= n; ++k) row.push_back(d(n, k));
        j.push_back(std::move(row));
    }
}

inline void to_json(json& j, const Verdict& v) {
    j = json{{"check", std::string(check_kind_name(v.kind))}, {"value", v.value}};
    if (v.pair) {
        j["alpha"] = v.pair->alpha;
        j["beta"] = v.pair->beta;
    } else {
        j["alpha"] = nullptr;
        j["beta"] = nullptr;
    }
}

inline void to_json(json& j, const AppShefResult& r) {
    j = json{{"member", r.member}};
    if (auto label = appshef_case_label(r.label)) {
        j["case"] = std::string(*label);
    } else {
        j["case"] = nullptr;
    }
    json g = json::array();
    for (const auto& x : r.gamma) g.push_back(x.to_string());
    j["gamma"] = std::move(g);
}

inline void to_json(json& j, const GeometricDual& d) { j = json{{"xi", d.xi}, {"eta", d.eta}}; }

inline json error_json(const Error& e) { return json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}; }

// Parsing back. Every scalar is read into the given field.

namespace detail {

inline const json& expect_array(const json& j, const char* what) {
    if (!j.is_array()) throw Error(Errc::parse_error, std::string(what) + " must be a JSON array");
    return j;
}

inline const json& expect_member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::parse_error, std::string("missing key '") + key + "'");
    return j.at(key);
}

}  // namespace detail

inline Scalar scalar_from_json(const json& j, const Field& f) {
    if (j.is_string()) return parse_scalar(j.get<std::string>(), f);
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    throw Error(Errc::parse_error, "scalar must be a string or integer");
}

inline std::vector<Scalar> scalars_from_json(const json& j, const Field& f) {
    std::vector<Scalar> out;
    for (const auto& x : detail::expect_array(j, "scalar list")) out.push_back(scalar_from_json(x, f));
    return out;
}

inline Series series_from_json(const json& j, const Field& f) { return Series(scalars_from_json(j, f)); }

inline Polynomial polynomial_from_json(const json& j, const Field& f) { return Polynomial(scalars_from_json(j, f), f); }

inline TriMatrix matrix_from_json(const json& j, const Field& f) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : detail::expect_array(j, "matrix")) rows.push_back(scalars_from_json(r, f));
    return TriMatrix::from_rows(rows, f);
}

inline Weight weight_from_json(const json& j, const Field& f) {
    return Weight(scalars_from_json(detail::expect_member(j, "w"), f));
}

inline RiordanPair pair_from_json(const json& j, const Field& f) {
    return {series_from_json(detail::expect_member(j, "alpha"), f), series_from_json(detail::expect_member(j, "beta"), f)};
}

inline Functional functional_from_json(const json& j, const Field& f) {
    return Functional(series_from_json(detail::expect_member(j, "t"), f));
}

inline HPolyMatrix hpoly_from_json(const json& j, const Field& f) {
    const auto& rows = detail::expect_array(j, "d-polynomial triangle");
    HPolyMatrix d(rows.size(), f);
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (!rows[n].is_array() || rows[n].size() != n + 1)
            throw Error(Errc::parse_error, "row " + std::to_string(n) + " needs " + std::to_string(n + 1) + " entries");
        for (std::size_t k = 0; k <= n; ++k) d(n, k) = polynomial_from_json(rows[n][k], f);
    }
    return d;
}

}  // namespace riordan
