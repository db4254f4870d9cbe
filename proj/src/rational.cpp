#include "motzkin/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace motzkin {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    std::string s(text);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("Rational: bad character in '" + s + "'");
    }
    try {
        mpq_class v(s, 10);
        if (sgn(v.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator");
        v.canonicalize();
        return Rational(v.get_num(), v.get_den());
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw std::domain_error("Rational: 0 to negative power");
    mpz_class num, den;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), a);
    return e < 0 ? Rational(den, num) : Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt int_pow(const BigInt& base, int e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

}  // namespace motzkin
