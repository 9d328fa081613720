#pragma once

#include <stdexcept>
#include <string>

namespace cyclift {

// Every failure the library can signal, one code per contract violation.
enum class errc {
    non_prime_p,
    reducible_modulus,
    size_overflow,
    field_mismatch,
    division_by_zero,
    order_not_dividing,
    zero_input,
    non_unit,
    not_principal_unit,
    mu_divisible_by_p,
    not_prime_field,
    degree_mismatch,
    ring_mismatch,
    zero_polynomial,
    n_divisible_by_p,
    index_out_of_range,
    malformed_target,
    prerequisite_failed,
    contained_in_branch_divisor,
    non_reduced_branch,
    non_unit_pivot,
    zero_restriction,
    syntax_error,
    not_homogeneous,
    unknown_variable,
    config_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::non_prime_p: return "NonPrimeP";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::size_overflow: return "SizeOverflow";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::order_not_dividing: return "OrderNotDividing";
    case errc::zero_input: return "ZeroInput";
    case errc::non_unit: return "NonUnit";
    case errc::not_principal_unit: return "NotPrincipalUnit";
    case errc::mu_divisible_by_p: return "MuDivisibleByP";
    case errc::not_prime_field: return "NotPrimeField";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::n_divisible_by_p: return "NDivisibleByP";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::malformed_target: return "MalformedTarget";
    case errc::prerequisite_failed: return "PrerequisiteFailed";
    case errc::contained_in_branch_divisor: return "ContainedInBranchDivisor";
    case errc::non_reduced_branch: return "NonReducedBranch";
    case errc::non_unit_pivot: return "NonUnitPivot";
    case errc::zero_restriction: return "ZeroRestriction";
    case errc::syntax_error: return "SyntaxError";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::unknown_variable: return "UnknownVariable";
    case errc::config_error: return "ConfigError";
    }
    return "?";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Syntax errors additionally carry the byte offset of the offending token.
class parse_error : public error {
public:
    parse_error(errc code, const std::string& msg, std::size_t offset)
        : error(code, msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) raise(code, msg);
}

} // namespace cyclift
