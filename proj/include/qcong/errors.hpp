#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcong {

/// Base class for every error raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary series operation applied to series of different orders.
struct order_mismatch_error : error {
    using error::error;
};

/// Exponent or coefficient index outside 0..order, or an empty
/// extraction range.
struct range_error : error {
    using error::error;
};

/// Inversion (or negative power) of a series whose constant term is
/// not +1 or -1; exact integer arithmetic would be lost.
struct non_unit_error : error {
    using error::error;
};

/// Invalid mathematical argument: zero step, modulus < 2, non-coprime
/// biregularity pair, divergent theta argument, oversized enumeration.
struct domain_error : error {
    using error::error;
};

/// Expression text rejected by the parser; `offset` is the byte
/// position of the offending token.
struct parse_error : error {
    std::size_t offset;
    parse_error(std::size_t at, const std::string& what)
        : error(what), offset(at) {}
};

/// Template instantiation failure: unbound placeholder or a computed
/// value that is not a positive integer.
struct template_error : error {
    using error::error;
};

/// Claim parameters outside a theorem's hypothesis.  Distinct from a
/// verification failure: the claim was never checked.
struct rejected_parameters_error : error {
    using error::error;
};

} // namespace qcong
