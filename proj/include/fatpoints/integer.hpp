#ifndef FATPOINTS_INTEGER_HPP
#define FATPOINTS_INTEGER_HPP

// Exact integer helpers shared by every module: checked 64-bit arithmetic,
// mathematical floor/ceiling division and integer square roots.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fatpoints {

using Int = std::int64_t;

/// Raised when an operation's documented precondition does not hold.
/// The message names the violated condition.
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an intermediate value leaves the 64-bit range.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// Raised when a computed object fails one of its own structural checks.
/// Seeing one means a bug or, for more than nine points, a value outside
/// what the conjectural formulas predict.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const char* condition) {
    if (!cond) throw PreconditionError(condition);
}

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Narrows a 128-bit accumulator, throwing if it does not fit.
inline Int narrow(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw OverflowError("integer overflow in accumulated sum");
    return static_cast<Int>(v);
}

/// Floor division rounding toward negative infinity.
inline Int floor_div(Int a, Int b) {
    require(b != 0, "division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Ceiling division rounding toward positive infinity.
inline Int ceil_div(Int a, Int b) {
    require(b != 0, "division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

/// Largest k >= 0 with k*k <= v.
inline Int isqrt_floor(Int v) {
    require(v >= 0, "square root of a negative integer");
    if (v < 2) return v;
    // Newton iteration from an over-estimate stays exact in 128 bits.
    unsigned __int128 x = static_cast<unsigned __int128>(v);
    unsigned __int128 y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + static_cast<unsigned __int128>(v) / x) / 2;
    }
    return static_cast<Int>(x);
}

/// Smallest k >= 0 with k*k >= v.
inline Int isqrt_ceil(Int v) {
    Int k = isqrt_floor(v);
    return (k * k == v) ? k : k + 1;
}

inline bool is_square(Int v) {
    if (v < 0) return false;
    Int k = isqrt_floor(v);
    return k * k == v;
}

} // namespace fatpoints

#endif
