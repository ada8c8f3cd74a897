#include "scoreseq/rational.hpp"

#include "scoreseq/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <limits>
#include <ostream>

namespace scoreseq {

namespace mp = boost::multiprecision;

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt parse_digits(std::string_view s) {
    BigInt out = 0;
    for (char c : s) {
        out *= 10;
        out += c - '0';
    }
    return out;
}

BigInt pow10(std::size_t exponent) {
    BigInt out = 1;
    for (std::size_t i = 0; i < exponent; ++i) out *= 10;
    return out;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw InvalidArgument("rational with zero denominator");
    value_ = denominator < 0 ? Value(-numerator, -denominator) : Value(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> InvalidArgument {
        return InvalidArgument("cannot parse rational from '" + std::string(text) + "'");
    };

    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) throw fail();

    Rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw fail();
        BigInt d = parse_digits(den);
        if (d == 0) throw fail();
        out = Rational(parse_digits(num), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw fail();
        if (!whole.empty() && !all_digits(whole)) throw fail();
        if (!frac.empty() && !all_digits(frac)) throw fail();
        BigInt scale = pow10(frac.size());
        BigInt num = (whole.empty() ? BigInt(0) : parse_digits(whole)) * scale +
                     (frac.empty() ? BigInt(0) : parse_digits(frac));
        out = Rational(num, scale);
    } else {
        if (!all_digits(body)) throw fail();
        out = Rational(parse_digits(body), BigInt(1));
    }
    return negative ? -out : out;
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

bool Rational::is_integer() const { return mp::denominator(value_) == 1; }
bool Rational::is_zero() const { return value_ == 0; }
int Rational::sign() const { return value_.sign(); }

BigInt Rational::floor() const {
    BigInt num = mp::numerator(value_);
    BigInt den = mp::denominator(value_);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

BigInt Rational::ceil() const {
    BigInt f = floor();
    return is_integer() ? f : f + 1;
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw NonIntegral(to_string() + " is not an integer");
    BigInt num = mp::numerator(value_);
    if (num > std::numeric_limits<std::int64_t>::max() ||
        num < std::numeric_limits<std::int64_t>::min()) {
        throw ResourceLimit(to_string() + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(num);
}

std::string Rational::to_string() const {
    if (is_integer()) return mp::numerator(value_).str();
    return mp::numerator(value_).str() + "/" + mp::denominator(value_).str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw InvalidArgument("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

Rational choose2(std::int64_t k) { return Rational(BigInt(k) * (k - 1), BigInt(2)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

}  // namespace scoreseq
