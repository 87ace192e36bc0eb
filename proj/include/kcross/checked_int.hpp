#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kcross {

class OverflowError : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

// 64-bit arithmetic that throws OverflowError instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, std::int64_t exponent)
{
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exponent; ++i)
        r = checked_mul(r, base);
    return r;
}

} // namespace kcross
