#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace scoreseq {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Exact rational number, always kept in canonical form: the denominator is
 * positive and shares no factor with the numerator. Zero is 0/1.
 *
 * Arithmetic never rounds; the integer parts grow as needed.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by intent
    Rational(const BigInt& numerator, const BigInt& denominator);

    /// Accepts "p", "p/q" and finite decimals such as "-0.7071".
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_integer() const;
    bool is_zero() const;
    int sign() const;

    BigInt floor() const;
    BigInt ceil() const;

    /// Integer value; throws NonIntegral when not integral, ResourceLimit when out of range.
    std::int64_t to_int64() const;

    /// Canonical text: "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    using Value = boost::multiprecision::cpp_rational;
    explicit Rational(Value value) : value_(std::move(value)) {}

    Value value_;
};

Rational abs(const Rational& value);

/// k choose 2 as an exact rational.
Rational choose2(std::int64_t k);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace scoreseq
