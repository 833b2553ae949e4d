#include "eulerlp/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace eulerlp {

Rational::Rational(const Integer& numerator, const Integer& denominator)
    : value_(numerator, denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        Integer z;
        if (part.empty() || z.set_str(std::string(part), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        return z;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
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
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational pow(const Rational& q, long e) {
    if (e < 0) return pow(Rational(1) / q, -e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return {num, den};
}

namespace {
long integer_valuation(Integer z, unsigned long p) {
    long v = 0;
    while (mpz_divisible_ui_p(z.get_mpz_t(), p)) {
        mpz_divexact_ui(z.get_mpz_t(), z.get_mpz_t(), p);
        ++v;
    }
    return v;
}
}  // namespace

long valuation(const Rational& q, unsigned long p) {
    if (q.is_zero()) throw std::domain_error("valuation of zero is infinite");
    return integer_valuation(q.numerator(), p) - integer_valuation(q.denominator(), p);
}

}  // namespace eulerlp
