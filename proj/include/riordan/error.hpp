#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace riordan {

// Every failure the library reports carries one of these codes.
enum class Errc {
    division_by_zero,
    backend_mismatch,
    order_mismatch,
    not_invertible,
    root_of_unity,
    zero_lambda,
    invalid_argument,
    invalid_weight,
    parse_error,
    inner_valuation_zero,
    not_valuation_one,
    not_valuation_zero,
    degree_too_high,
    singular_diagonal,
    not_riordan,
    not_sheffer,
    not_commuting,
    not_degree_decreasing,
    zero_shift,
    char_p,
    forbidden_lambda,
};

constexpr std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::backend_mismatch: return "BackendMismatch";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::root_of_unity: return "RootOfUnity";
    case Errc::zero_lambda: return "ZeroLambda";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::invalid_weight: return "InvalidWeight";
    case Errc::parse_error: return "ParseError";
    case Errc::inner_valuation_zero: return "InnerValuationZero";
    case Errc::not_valuation_one: return "NotValuationOne";
    case Errc::not_valuation_zero: return "NotValuationZero";
    case Errc::degree_too_high: return "DegreeTooHigh";
    case Errc::singular_diagonal: return "SingularDiagonal";
    case Errc::not_riordan: return "NotRiordan";
    case Errc::not_sheffer: return "NotSheffer";
    case Errc::not_commuting: return "NotCommuting";
    case Errc::not_degree_decreasing: return "NotDegreeDecreasing";
    case Errc::zero_shift: return "ZeroShift";
    case Errc::char_p: return "CharP";
    case Errc::forbidden_lambda: return "ForbiddenLambda";
    }
    return "Unknown";
}

class Error : public std::domain_error {
public:
    Error(Errc code, const std::string& detail)
        : std::domain_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace riordan
