#pragma once

// Arbitrary-precision integers and reduced rationals.
//
// Every Rational is kept in lowest terms with a positive denominator, so
// structural equality is value equality and the denominator of a rational
// is the "b" of a Ford circle C_{a/b}.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fordcf {

using Integer = mpz_class;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}  // NOLINT: integers embed implicitly
    explicit Rational(Integer n) : num_(std::move(n)), den_(1) {}

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator-() const;
    Rational reciprocal() const;

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

private:
    friend Rational make_rational(Integer num, Integer den);
    struct Reduced {};
    Rational(Integer n, Integer d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

    Integer num_;
    Integer den_;
};

/// Reduced form of num/den with the sign carried by the numerator.
/// Throws std::domain_error("zero denominator") when den == 0.
Rational make_rational(Integer num, Integer den);

Rational abs(const Rational& x);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// Three-way comparison of two Integers as a std::strong_ordering.
std::strong_ordering compare(const Integer& x, const Integer& y);

Integer gcd(const Integer& x, const Integer& y);
bool coprime(const Integer& x, const Integer& y);

/// Floor of the square root of n >= 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "p/q" or "p" (optional leading minus). Throws std::invalid_argument
/// on malformed text and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Fixed-point decimal with `places` digits after the point, rounded half
/// away from zero, computed exactly.
std::string to_fixed(const Rational& x, int places);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace fordcf
