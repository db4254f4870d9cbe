#include "motzkin/ratfn.hpp"

#include <ostream>
#include <stdexcept>

namespace motzkin {

RatFnX::RatFnX(PolyX num, PolyX den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFnX: zero denominator");
    reduce();
}

void RatFnX::reduce() {
    if (num_.is_zero()) {
        den_ = PolyX(Rational(1));
        return;
    }
    PolyX g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

PolyX RatFnX::to_poly() const {
    if (!is_polynomial()) throw std::domain_error("RatFnX: not a polynomial: " + str());
    return num_;
}

RatFnX RatFnX::operator-() const {
    RatFnX out(*this);
    out.num_ = -out.num_;
    return out;
}

RatFnX& RatFnX::operator+=(const RatFnX& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFnX& RatFnX::operator-=(const RatFnX& o) { return *this += -o; }

RatFnX& RatFnX::operator*=(const RatFnX& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RatFnX& RatFnX::operator/=(const RatFnX& o) {
    if (o.is_zero()) throw std::domain_error("RatFnX: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::string RatFnX::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFnX& f) { return os << f.str(); }

RatFnX chebyshev_shifted_ratio(int a, int b) {
    PolyX num = a < 0 ? PolyX() : chebyshev_u_shifted(a);
    PolyX den = b < 0 ? PolyX() : chebyshev_u_shifted(b);
    return RatFnX(num, den);
}

}  // namespace motzkin
