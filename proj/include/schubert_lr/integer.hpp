#pragma once

#include <cstdint>
#include <stdexcept>

namespace schubert_lr {

/// Exact integer type used for counts and polynomial coefficients.
/// All arithmetic on it goes through the checked helpers below; wraparound
/// is never silently accepted.
using Integer = std::int64_t;

inline Integer checked_add(Integer a, Integer b)
{
    Integer r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return r;
}

inline Integer checked_sub(Integer a, Integer b)
{
    Integer r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in subtraction");
    }
    return r;
}

inline Integer checked_mul(Integer a, Integer b)
{
    Integer r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return r;
}

} // namespace schubert_lr
