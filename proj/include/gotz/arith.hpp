#ifndef GOTZ_ARITH_HPP
#define GOTZ_ARITH_HPP

#include <cstdint>
#include <limits>
#include <string>

#include <gotz/error.hpp>

namespace gotz
{

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw overflow_error("unsigned addition overflows 64 bits: " + std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

inline std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b)
{
    if (b > a) {
        throw overflow_error("unsigned subtraction underflows: " + std::to_string(a) + " - " + std::to_string(b));
    }
    return a - b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw overflow_error("unsigned multiplication overflows 64 bits: " + std::to_string(a) + " * "
                             + std::to_string(b));
    }
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw overflow_error("signed addition overflows 64 bits");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw overflow_error("signed subtraction overflows 64 bits");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw overflow_error("signed multiplication overflows 64 bits");
    }
    return r;
}

inline std::int64_t to_signed(std::uint64_t a)
{
    if (a > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw overflow_error("value " + std::to_string(a) + " does not fit a signed 64-bit integer");
    }
    return static_cast<std::int64_t>(a);
}

// Exact C(n, k) by the multiplicative formula. C(n, k) = 0 when k > n.
// Each partial product C(n-k+i, i) is an integer, so the division is exact;
// the 128-bit intermediate keeps r * (n-k+i) from wrapping before the check.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            throw overflow_error("binomial C(" + std::to_string(n) + ", " + std::to_string(k)
                                 + ") overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace gotz

#endif
