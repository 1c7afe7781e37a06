#pragma once

#include <stdexcept>
#include <string>

namespace nw {

enum class Errc : int {
    ok = 0,
    invalid_argument = 1,
    not_prime,
    reducible_modulus,
    degree_mismatch,
    division_by_zero,
    field_mismatch,
    insufficient_precision,
    reducible_base,
    zero_argument,
    not_enough_coefficients,
    out_of_support,
    internal_inconsistency,
    non_square_zero_region,
    not_complete,
    non_geometric_edge,
    too_short,
    embedding_incomplete,
    insufficient_prefix,
    invalid_portion,
    out_of_regime,
    unsupported_shape_pair,
    no_seed_with_blade,
    space_too_large,
    overlapping_portions,
    parse_error,
    io_error,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace nw
