#pragma once

// Exact non-negative rational arithmetic for precision/recall bookkeeping.
// Values stay small (numerators bounded by corpus size, denominators by
// products of retrieval counts), but intermediates go through __int128 so
// sums of many fractions cannot silently overflow.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fihris {

class Rational {
public:
    constexpr Rational() = default;

    constexpr Rational(std::int64_t num, std::int64_t den)
        : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr Rational operator+(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ +
                     static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from_wide(n, d);
    }

    constexpr Rational operator-(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ -
                     static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from_wide(n, d);
    }

    constexpr Rational operator*(const Rational& o) const {
        return from_wide(static_cast<__int128>(num_) * o.num_,
                         static_cast<__int128>(den_) * o.den_);
    }

    constexpr Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
        return from_wide(static_cast<__int128>(num_) * o.den_,
                         static_cast<__int128>(den_) * o.num_);
    }

    constexpr bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    constexpr bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ <
               static_cast<__int128>(o.num_) * den_;
    }
    constexpr bool operator>(const Rational& o) const { return o < *this; }
    constexpr bool operator<=(const Rational& o) const { return !(o < *this); }
    constexpr bool operator>=(const Rational& o) const { return !(*this < o); }

    constexpr double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static constexpr Rational from_wide(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd_wide(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational out of 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static constexpr __int128 gcd_wide(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    constexpr void reduce() {
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace fihris
