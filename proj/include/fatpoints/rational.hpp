#ifndef FATPOINTS_RATIONAL_HPP
#define FATPOINTS_RATIONAL_HPP

#include "fatpoints/integer.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fatpoints {

/// Exact rational number with 64-bit numerator and positive denominator,
/// always stored in lowest terms. Intermediate products use 128 bits.
class Rational {
public:
    Rational() = default;
    Rational(Int value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(Int num, Int den);

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }

    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return ceil_div(num_, den_); }
    bool is_integer() const noexcept { return den_ == 1; }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;
    /// Accepts "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(sub(0, a.num_), a.den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 num, __int128 den);

    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace fatpoints

#endif
