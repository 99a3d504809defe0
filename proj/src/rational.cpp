#include "cspec/rational.hpp"

#include <stdexcept>

namespace cspec {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    // normalize the sign here; not every Boost rational backend does
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                     : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)), BigInt(1));
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

}  // namespace cspec
