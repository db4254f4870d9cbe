#ifndef MOTZKIN_RATFN_HPP
#define MOTZKIN_RATFN_HPP

#include <string>

#include "motzkin/poly.hpp"

namespace motzkin {

/// Rational function in x over the rationals.  Kept with numerator and
/// denominator coprime and the denominator monic.
class RatFnX {
public:
    RatFnX() : num_(), den_(Rational(1)) {}
    RatFnX(const PolyX& p) : num_(p), den_(Rational(1)) {}  // NOLINT: implicit
    RatFnX(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    RatFnX(long c) : num_(Rational(c)), den_(Rational(1)) {}   // NOLINT
    RatFnX(PolyX num, PolyX den);

    const PolyX& numerator() const { return num_; }
    const PolyX& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// Throws std::domain_error unless the denominator is 1.
    PolyX to_poly() const;

    RatFnX operator-() const;
    RatFnX& operator+=(const RatFnX& o);
    RatFnX& operator-=(const RatFnX& o);
    RatFnX& operator*=(const RatFnX& o);
    RatFnX& operator/=(const RatFnX& o);

    friend RatFnX operator+(RatFnX a, const RatFnX& b) { return a += b; }
    friend RatFnX operator-(RatFnX a, const RatFnX& b) { return a -= b; }
    friend RatFnX operator*(RatFnX a, const RatFnX& b) { return a *= b; }
    friend RatFnX operator/(RatFnX a, const RatFnX& b) { return a /= b; }

    friend bool operator==(const RatFnX& a, const RatFnX& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFnX& a, const RatFnX& b) { return !(a == b); }

    std::string str() const;

private:
    void reduce();
    PolyX num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFnX& f);

/// The coefficient u_a(x-1) / u_b(x-1) appearing in the cell-module basis
/// change; by convention u_{-1} = 0.
RatFnX chebyshev_shifted_ratio(int a, int b);

}  // namespace motzkin

#endif
