#pragma once

// Command interpreter behind the riordan CLI. A Session owns a registry of
// named objects, all over one field and one truncation order.
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 usage error
// (bad syntax, unknown name or command), 3 math-domain error.

#include <riordan/json.hpp>

#include <algorithm>
#include <cctype>
#include <istream>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace riordan {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Object = std::variant<Weight, Series, RiordanPair, TriMatrix, Functional>;

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(detail::trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::vector<std::string> tokenize(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

// ---------------------------------------------------------------------------
// Aligned-text rendering

namespace text {

inline std::string scalars(std::span<const Scalar> xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
    return out + "]";
}

inline std::string series(const Series& s) {
    return Polynomial(std::vector<Scalar>(s.coefficients().begin(), s.coefficients().end()), s.field()).to_string("y", true) +
           " + O(y^" + std::to_string(s.order()) + ")";
}

inline std::string matrix(const TriMatrix& a) {
    std::size_t width = 1;
    for (std::size_t n = 0; n < a.order(); ++n)
        for (std::size_t k = 0; k <= n; ++k) width = std::max(width, a(n, k).to_string().size());
    std::string out;
    for (std::size_t n = 0; n < a.order(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            std::string s = a(n, k).to_string();
            out += (k ? "  " : "") + std::string(width - s.size(), ' ') + s;
        }
        out += "\n";
    }
    return out;
}

inline std::string labelled(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [l, _] : rows) width = std::max(width, l.size());
    std::string out;
    for (const auto& [l, v] : rows) out += l + std::string(width - l.size(), ' ') + " = " + v + "\n";
    return out;
}

inline std::string object(const Object& obj) {
    return std::visit(
        [](const auto& o) -> std::string {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Weight>) {
                return "w = " + scalars(o.values()) + "\n";
            } else if constexpr (std::is_same_v<T, Series>) {
                return series(o) + "\n";
            } else if constexpr (std::is_same_v<T, RiordanPair>) {
                return labelled({{"alpha", series(o.alpha)}, {"beta", series(o.beta)}});
            } else if constexpr (std::is_same_v<T, TriMatrix>) {
                return matrix(o);
            } else {
                return "t = " + scalars(o.t.coefficients()) + "\n";
            }
        },
        obj);
}

}  // namespace text

inline json object_json(const Object& obj) {
    return std::visit([](const auto& o) { return json(o); }, obj);
}

class Session {
public:
    Session(std::size_t order, Field field, bool json_output = false)
        : order_(order), field_(std::move(field)), json_(json_output) {
        if (order < 2 || order > 64) throw UsageError("order must be in 2..64, got " + std::to_string(order));
    }

    std::size_t order() const noexcept { return order_; }
    const Field& field() const noexcept { return field_; }
    bool json_output() const noexcept { return json_; }

    const Object* find(const std::string& name) const {
        auto it = objects_.find(name);
        return it == objects_.end() ? nullptr : &it->second;
    }

    /// One command, already split into words.
    Outcome run(const std::vector<std::string>& args) {
        Outcome r;
        try {
            if (args.empty()) throw UsageError("empty command");
            r = dispatch(args);
        } catch (const UsageError& e) {
            r = {2, "", std::string("UsageError: ") + e.what() + "\n"};
        } catch (const Error& e) {
            const int code = e.code() == Errc::parse_error ? 2 : 3;
            r = {code, "", std::string(e.what()) + "\n"};
        }
        return r;
    }

    Outcome run_line(std::string_view line) { return run(tokenize(line)); }

    /// One command per line; blank lines and '#' comments are skipped.
    /// Stops at the first failing command (exit code >= 2).
    Outcome run_script(std::istream& in) {
        Outcome total;
        std::size_t lineno = 0;
        for (std::string line; std::getline(in, line);) {
            ++lineno;
            auto trimmed = detail::trim(line);
            if (trimmed.empty() || trimmed.front() == '#') continue;
            Outcome r = run_line(trimmed);
            total.out += r.out;
            total.code = r.code;
            if (r.code >= 2) {
                total.err += "line " + std::to_string(lineno) + ": " + r.err;
                break;
            }
            total.err += r.err;
        }
        return total;
    }

private:
    using Args = std::vector<std::string>;

    static void arity(const Args& a, std::size_t lo, std::size_t hi, const char* usage) {
        if (a.size() < lo || a.size() > hi) throw UsageError(std::string("usage: ") + usage);
    }

    Scalar scalar(const Args& a, std::size_t i) const {
        try {
            return parse_scalar(a.at(i), field_);
        } catch (const Error& e) {
            if (e.code() == Errc::parse_error)
                throw Error(Errc::parse_error, "argument " + std::to_string(i + 1) + " ('" + a[i] + "'): " + e.what());
            throw;
        }
    }

    std::vector<Scalar> scalar_list(const Args& a, std::size_t i) const {
        std::vector<Scalar> out;
        std::size_t pos = 0;
        for (const auto& item : split(a.at(i), ',')) {
            ++pos;
            try {
                out.push_back(parse_scalar(item, field_));
            } catch (const Error& e) {
                if (e.code() == Errc::parse_error)
                    throw Error(Errc::parse_error, "argument " + std::to_string(i + 1) + ", entry " + std::to_string(pos) +
                                                       " ('" + item + "'): " + e.what());
                throw;
            }
        }
        return out;
    }

    std::size_t index(const Args& a, std::size_t i) const {
        const std::string& s = a.at(i);
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw UsageError("argument " + std::to_string(i + 1) + " ('" + s + "') must be a nonnegative integer");
        return std::stoul(s);
    }

    template <class T>
    const T& get(const std::string& name) const {
        const Object* o = find(name);
        if (!o) throw UsageError("UnknownName: '" + name + "'");
        if (const T* t = std::get_if<T>(o)) return *t;
        throw UsageError("'" + name + "' is a " + kind_name(*o) + ", expected a " + type_name<T>());
    }

    template <class T>
    static const char* type_name() {
        if constexpr (std::is_same_v<T, Weight>) return "weight";
        else if constexpr (std::is_same_v<T, Series>) return "series";
        else if constexpr (std::is_same_v<T, RiordanPair>) return "pair";
        else if constexpr (std::is_same_v<T, TriMatrix>) return "matrix";
        else return "functional";
    }

    static std::string kind_name(const Object& o) {
        static const char* names[] = {"weight", "series", "pair", "matrix", "functional"};
        return names[o.index()];
    }

    Outcome emit(const json& j, const std::string& txt, int code = 0) const {
        return {code, json_ ? j.dump() + "\n" : txt, ""};
    }

    Outcome define(const std::string& name, Object obj) {
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
            throw UsageError("invalid object name '" + name + "'");
        Outcome r = emit(object_json(obj), text::object(obj));
        objects_.insert_or_assign(name, std::move(obj));
        return r;
    }

    Outcome dispatch(const Args& a) {
        const std::string& cmd = a[0];
        if (cmd == "weight") return cmd_weight(a);
        if (cmd == "series") return cmd_series(a);
        if (cmd == "pair") return cmd_pair(a);
        if (cmd == "matrix") return cmd_matrix(a);
        if (cmd == "functional") return cmd_functional(a);
        if (cmd == "show") return cmd_show(a);
        if (cmd == "polys") return cmd_polys(a);
        if (cmd == "check") return cmd_check(a);
        if (cmd == "twoweight") return cmd_twoweight(a);
        if (cmd == "dpolys") return cmd_dpolys(a);
        if (cmd == "apply") return cmd_apply(a);
        throw UsageError("unknown command '" + cmd + "'");
    }

    // weight NAME exp L | geom L | qfac L Q | expcase L S | rescale W L | custom w0,w1,.. | gamma W g0,g1,..
    Outcome cmd_weight(const Args& a) {
        arity(a, 3, 5, "weight NAME (exp L | geom L | qfac L Q | expcase L S | rescale W L | custom LIST | gamma W LIST)");
        const std::string& kind = a[2];
        if (kind == "exp") return arity(a, 4, 4, "weight NAME exp L"), define(a[1], Weight::exponential(scalar(a, 3), order_));
        if (kind == "geom") return arity(a, 4, 4, "weight NAME geom L"), define(a[1], Weight::geometric(scalar(a, 3), order_));
        if (kind == "qfac")
            return arity(a, 5, 5, "weight NAME qfac L Q"), define(a[1], Weight::q_factorial(scalar(a, 3), scalar(a, 4), order_));
        if (kind == "expcase")
            return arity(a, 5, 5, "weight NAME expcase L S"), define(a[1], exp_case_weights(scalar(a, 3), scalar(a, 4), order_));
        if (kind == "rescale")
            return arity(a, 5, 5, "weight NAME rescale W L"), define(a[1], rescale_weight(get<Weight>(a[3]), scalar(a, 4)));
        if (kind == "custom") {
            arity(a, 4, 4, "weight NAME custom w0,w1,...");
            auto w = scalar_list(a, 3);
            if (w.size() != order_)
                throw UsageError("custom weight needs " + std::to_string(order_) + " entries, got " + std::to_string(w.size()));
            return define(a[1], Weight(std::move(w)));
        }
        if (kind == "gamma") {
            arity(a, 5, 5, "weight NAME gamma W g0,g1,...");
            return define(a[1], tilde_weight_from_gamma(get<Weight>(a[3]), scalar_list(a, 4)));
        }
        throw UsageError("unknown weight kind '" + kind + "'");
    }

    // series NAME list c0,c1,.. | exp H | wexp W H | mul A B | compose A B | inverse A | compinv A
    Outcome cmd_series(const Args& a) {
        arity(a, 3, 5, "series NAME (list LIST | exp H | wexp W H | mul A B | compose A B | inverse A | compinv A)");
        const std::string& kind = a[2];
        if (kind == "list") {
            arity(a, 4, 4, "series NAME list c0,c1,...");
            auto c = scalar_list(a, 3);
            if (c.size() > order_) throw UsageError("more than " + std::to_string(order_) + " coefficients");
            return define(a[1], Series::from_coefficients(std::move(c), order_, field_));
        }
        if (kind == "exp") {
            arity(a, 4, 4, "series NAME exp H");
            return define(a[1], eval_functional(scalar(a, 3), Weight::exponential(field_.one(), order_)).t);
        }
        if (kind == "wexp") {
            arity(a, 5, 5, "series NAME wexp W H");
            return define(a[1], eval_functional(scalar(a, 4), get<Weight>(a[3])).t);
        }
        if (kind == "mul") return arity(a, 5, 5, "series NAME mul A B"), define(a[1], get<Series>(a[3]) * get<Series>(a[4]));
        if (kind == "compose")
            return arity(a, 5, 5, "series NAME compose OUTER INNER"), define(a[1], compose(get<Series>(a[3]), get<Series>(a[4])));
        if (kind == "inverse") return arity(a, 4, 4, "series NAME inverse A"), define(a[1], inverse(get<Series>(a[3])));
        if (kind == "compinv")
            return arity(a, 4, 4, "series NAME compinv A"), define(a[1], compositional_inverse(get<Series>(a[3])));
        throw UsageError("unknown series kind '" + kind + "'");
    }

    // pair NAME ALPHA BETA | pair NAME mul P Q | pair NAME inverse P | pair NAME of M W
    Outcome cmd_pair(const Args& a) {
        arity(a, 4, 5, "pair NAME (ALPHA BETA | mul P Q | inverse P | of M W)");
        if (a[2] == "mul" && a.size() == 5) return define(a[1], get<RiordanPair>(a[3]) * get<RiordanPair>(a[4]));
        if (a[2] == "inverse" && a.size() == 4) return define(a[1], inverse(get<RiordanPair>(a[3])));
        if (a[2] == "of" && a.size() == 5) return define(a[1], matrix_to_pair(get<TriMatrix>(a[3]), get<Weight>(a[4])));
        arity(a, 4, 4, "pair NAME ALPHA BETA");
        return define(a[1], RiordanPair(get<Series>(a[2]), get<Series>(a[3])));
    }

    // matrix NAME identity | pair P W | translation W H | appell ALPHA W | derivative W
    //             | difference W A | conjugator M | rows r0;r1;.. | diag LIST
    //             | qop M W | mul A B | inverse A | changeweight A W W2 | binomial A W
    Outcome cmd_matrix(const Args& a) {
        arity(a, 3, 6, "matrix NAME KIND ...");
        const std::string& kind = a[2];
        if (kind == "identity") return arity(a, 3, 3, "matrix NAME identity"), define(a[1], TriMatrix::identity(order_, field_));
        if (kind == "pair")
            return arity(a, 5, 5, "matrix NAME pair P W"), define(a[1], pair_to_matrix(get<RiordanPair>(a[3]), get<Weight>(a[4])));
        if (kind == "translation")
            return arity(a, 5, 5, "matrix NAME translation W H"), define(a[1], translation_matrix(get<Weight>(a[3]), scalar(a, 4)));
        if (kind == "appell")
            return arity(a, 5, 5, "matrix NAME appell ALPHA W"), define(a[1], appell_from_alpha(get<Series>(a[3]), get<Weight>(a[4])));
        if (kind == "derivative") return arity(a, 4, 4, "matrix NAME derivative W"), define(a[1], m_matrix(get<Weight>(a[3])));
        if (kind == "difference")
            return arity(a, 5, 5, "matrix NAME difference W A"),
                   define(a[1], finite_difference_matrix(get<Weight>(a[3]), scalar(a, 4)));
        if (kind == "conjugator")
            return arity(a, 4, 4, "matrix NAME conjugator M"), define(a[1], solve_conjugator(get<TriMatrix>(a[3])));
        if (kind == "qop") return arity(a, 5, 5, "matrix NAME qop M W"), define(a[1], q_operator(get<TriMatrix>(a[3]), get<Weight>(a[4])));
        if (kind == "mul") return arity(a, 5, 5, "matrix NAME mul A B"), define(a[1], get<TriMatrix>(a[3]) * get<TriMatrix>(a[4]));
        if (kind == "inverse") return arity(a, 4, 4, "matrix NAME inverse A"), define(a[1], inverse(get<TriMatrix>(a[3])));
        if (kind == "binomial")
            return arity(a, 5, 5, "matrix NAME binomial A W"),
                   define(a[1], binomial_associate(get<TriMatrix>(a[3]), get<Weight>(a[4])));
        if (kind == "changeweight")
            return arity(a, 6, 6, "matrix NAME changeweight A W W2"),
                   define(a[1], change_weight(get<TriMatrix>(a[3]), get<Weight>(a[4]), get<Weight>(a[5])));
        if (kind == "diag") {
            arity(a, 4, 4, "matrix NAME diag d0,d1,...");
            auto d = scalar_list(a, 3);
            if (d.size() != order_) throw UsageError("diagonal needs " + std::to_string(order_) + " entries");
            return define(a[1], TriMatrix::diagonal(d));
        }
        if (kind == "rows") {
            arity(a, 4, 4, "matrix NAME rows r0;r1;...  (entries comma separated)");
            std::vector<std::vector<Scalar>> rows;
            for (const auto& r : split(a[3], ';')) rows.push_back(scalar_list({r}, 0));
            if (rows.size() != order_) throw UsageError("matrix needs " + std::to_string(order_) + " rows");
            for (std::size_t n = 0; n < rows.size(); ++n)
                if (rows[n].size() != n + 1) throw UsageError("row " + std::to_string(n) + " needs " + std::to_string(n + 1) + " entries");
            return define(a[1], TriMatrix::from_rows(rows, field_));
        }
        throw UsageError("unknown matrix kind '" + kind + "'");
    }

    // functional NAME eval H W | values t0,.. | dual M W R | mul F G W | of S W
    Outcome cmd_functional(const Args& a) {
        arity(a, 4, 6, "functional NAME (eval H W | values LIST | dual M W R | mul F G W | of S W)");
        const std::string& kind = a[2];
        if (kind == "eval")
            return arity(a, 5, 5, "functional NAME eval H W"), define(a[1], eval_functional(scalar(a, 3), get<Weight>(a[4])));
        if (kind == "values") {
            arity(a, 4, 4, "functional NAME values t0,t1,...");
            auto t = scalar_list(a, 3);
            if (t.size() > order_) throw UsageError("more than " + std::to_string(order_) + " values");
            return define(a[1], Functional(Series::from_coefficients(std::move(t), order_, field_)));
        }
        if (kind == "dual") {
            arity(a, 6, 6, "functional NAME dual M W R");
            const std::size_t r = index(a, 5);
            if (r >= order_) throw UsageError("dual index must be below " + std::to_string(order_));
            return define(a[1], dual_basis(get<TriMatrix>(a[3]), get<Weight>(a[4]))[r]);
        }
        if (kind == "mul")
            return arity(a, 6, 6, "functional NAME mul F G W"),
                   define(a[1], functional_mul(get<Functional>(a[3]), get<Functional>(a[4]), get<Weight>(a[5])));
        if (kind == "of")
            return arity(a, 5, 5, "functional NAME of S W"),
                   define(a[1], functional_of_operator(get<TriMatrix>(a[3]), get<Weight>(a[4])));
        throw UsageError("unknown functional kind '" + kind + "'");
    }

    Outcome cmd_show(const Args& a) {
        arity(a, 2, 2, "show NAME");
        const Object* o = find(a[1]);
        if (!o) throw UsageError("UnknownName: '" + a[1] + "'");
        return emit(object_json(*o), text::object(*o));
    }

    // polys REF [W]: REF is a matrix, or a pair expanded under W
    Outcome cmd_polys(const Args& a) {
        arity(a, 2, 3, "polys (MATRIX | PAIR W)");
        const Object* o = find(a[1]);
        if (!o) throw UsageError("UnknownName: '" + a[1] + "'");
        TriMatrix m = std::holds_alternative<RiordanPair>(*o)
                          ? (a.size() == 3 ? pair_to_matrix(std::get<RiordanPair>(*o), get<Weight>(a[2]))
                                           : throw UsageError("a pair needs a weight: polys PAIR W"))
                          : get<TriMatrix>(a[1]);
        if (a.size() == 3) get<Weight>(a[2]);
        const auto ps = matrix_to_polys(m);
        json j = json::array();
        std::vector<std::pair<std::string, std::string>> rows;
        for (std::size_t n = 0; n < ps.size(); ++n) {
            j.push_back(ps[n]);
            rows.emplace_back("p_" + std::to_string(n), ps[n].to_string());
        }
        return emit(j, text::labelled(rows));
    }

    Outcome cmd_check(const Args& a) {
        arity(a, 4, 4, "check MATRIX W (riordan|sheffer|appell|binomial)");
        auto kind = parse_check_kind(a[3]);
        if (!kind) throw UsageError("unknown check '" + a[3] + "'");
        const Verdict v = classify(get<TriMatrix>(a[1]), get<Weight>(a[2]), *kind);
        std::vector<std::pair<std::string, std::string>> rows{{std::string(check_kind_name(v.kind)), v.value ? "true" : "false"}};
        if (v.pair) {
            rows.emplace_back("alpha", text::series(v.pair->alpha));
            rows.emplace_back("beta", text::series(v.pair->beta));
        }
        return emit(json(v), text::labelled(rows), v.value ? 0 : 1);
    }

    Outcome cmd_twoweight(const Args& a) {
        arity(a, 4, 4, "twoweight ALPHA W W2");
        const AppShefResult r = appshef_classify(get<Series>(a[1]), get<Weight>(a[2]), get<Weight>(a[3]));
        const auto label = appshef_case_label(r.label);
        std::string txt = text::labelled({{"member", r.member ? "true" : "false"},
                                          {"case", label ? std::string(*label) : "-"},
                                          {"gamma", text::scalars(r.gamma)}});
        return emit(json(r), txt, r.member ? 0 : 1);
    }

    Outcome cmd_dpolys(const Args& a) {
        arity(a, 3, 3, "dpolys MATRIX W");
        const HPolyMatrix d = d_polynomials(get<TriMatrix>(a[1]), get<Weight>(a[2]));
        std::vector<std::pair<std::string, std::string>> rows;
        for (std::size_t n = 0; n < d.order(); ++n)
            for (std::size_t k = 0; k <= n; ++k)
                rows.emplace_back("d_" + std::to_string(n) + "," + std::to_string(k), d(n, k).to_string("h"));
        return emit(json(d), text::labelled(rows));
    }

    // apply F W c0,c1,..: phi(c0 + c1 x + ...)
    Outcome cmd_apply(const Args& a) {
        arity(a, 4, 4, "apply FUNCTIONAL W c0,c1,...");
        const Scalar v = apply(get<Functional>(a[1]), Polynomial(scalar_list(a, 3), field_), get<Weight>(a[2]));
        return emit(json(v), v.to_string() + "\n");
    }

    std::size_t order_;
    Field field_;
    bool json_;
    std::map<std::string, Object> objects_;
};

/// "rat" or "mod:p"
inline Field parse_field(std::string_view s) {
    if (s == "rat") return Field::rational();
    if (s.starts_with("mod:")) {
        const std::string p(s.substr(4));
        if (p.empty() || !std::all_of(p.begin(), p.end(), [](unsigned char c) { return std::isdigit(c); }) || p.size() > 19)
            throw UsageError("bad modulus in --field " + std::string(s));
        try {
            return Field::modular(std::stoull(p));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("--field must be rat or mod:p, got '" + std::string(s) + "'");
}

}  // namespace riordan
