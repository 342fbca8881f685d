#pragma once

#include <cstdint>

#include "hserre/error.hpp"

namespace hserre {

using Int = std::int64_t;

// Overflow-checked 64-bit arithmetic. Every counting and transform routine
// goes through these; overflow raises ErrorCode::Overflow instead of wrapping.

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
    return r;
}

// Binomial coefficient C(n, k); zero when k < 0 or k > n, and for n < 0.
Int binomial(Int n, Int k);

} // namespace hserre
