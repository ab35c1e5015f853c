#pragma once

#include "gsp4spin/errors.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace gsp4 {

/// Exact rational number with a small fixed-width representation.
/// Exponents in this library stay tiny (half-integers for the most part),
/// so no arbitrary precision is needed.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_integer() const { return den_ == 1; }
    /// True when the denominator divides 2 (integer or half-integer).
    constexpr bool is_half_integral() const { return den_ == 1 || den_ == 2; }

    constexpr Rational operator-() const { return raw(-num_, den_); }
    constexpr Rational operator+(const Rational& o) const {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }
    constexpr Rational operator-(const Rational& o) const { return *this + (-o); }
    constexpr Rational operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }
    constexpr Rational operator*(std::int64_t k) const { return {num_ * k, den_}; }

    constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
    constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend constexpr auto operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Renders as "p" for integers and "p/q" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p" or "p/q". Throws DomainError on malformed input.
    static Rational parse(const std::string& text);

    /// One half, the most common non-integral exponent around here.
    static constexpr Rational half() { return {1, 2}; }

private:
    static constexpr Rational raw(std::int64_t n, std::int64_t d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    constexpr void normalize() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace gsp4
