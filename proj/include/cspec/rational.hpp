#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace cspec {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always kept normalized: positive denominator,
/// numerator and denominator coprime.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(const BigInt& num, const BigInt& den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or "p" (q > 0 after normalization). Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    bool is_even_integer() const { return is_integer() && numerator() % 2 == 0; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    boost::multiprecision::cpp_rational value_;
};

/// One half, the only non-integer weight the constructions need.
inline Rational half() { return {1, 2}; }

}  // namespace cspec
