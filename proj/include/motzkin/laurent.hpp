#ifndef MOTZKIN_LAURENT_HPP
#define MOTZKIN_LAURENT_HPP

#include <map>
#include <string>

#include "motzkin/rational.hpp"

namespace motzkin {

/// Laurent polynomial in s over the rationals, where s stands for q^(1/2)
/// (so q = s^2).  No zero coefficients are stored.
class LaurentS {
public:
    LaurentS() = default;
    LaurentS(const Rational& constant);  // NOLINT: implicit by design
    LaurentS(long constant) : LaurentS(Rational(constant)) {}

    static LaurentS s_power(int e);        // s^e, e may be negative
    static LaurentS q_power(int e) { return s_power(2 * e); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    Rational coeff(int e) const;
    int min_exponent() const;
    int max_exponent() const;

    LaurentS operator-() const;
    LaurentS& operator+=(const LaurentS& o);
    LaurentS& operator-=(const LaurentS& o);
    LaurentS& operator*=(const LaurentS& o);
    LaurentS& operator*=(const Rational& c);

    friend LaurentS operator+(LaurentS a, const LaurentS& b) { return a += b; }
    friend LaurentS operator-(LaurentS a, const LaurentS& b) { return a -= b; }
    friend LaurentS operator*(const LaurentS& a, const LaurentS& b);
    friend LaurentS operator*(LaurentS a, const Rational& c) { return a *= c; }
    friend LaurentS operator*(const Rational& c, LaurentS a) { return a *= c; }

    friend bool operator==(const LaurentS& a, const LaurentS& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentS& a, const LaurentS& b) { return !(a == b); }
    bool operator<(const LaurentS& o) const { return c_ < o.c_; }  // container ordering

    LaurentS pow(int e) const;

    /// The substitution s -> s^(-1) (equivalently q -> q^(-1)).
    LaurentS invert_s() const;

    /// Evaluation at a nonzero rational value of s.
    Rational eval(const Rational& s_val) const;

    std::string str() const;

private:
    std::map<int, Rational> c_;  // exponent -> coefficient
};

std::ostream& operator<<(std::ostream& os, const LaurentS& v);

/// The Motzkin parameter zeta_q = 1 - q - q^(-1) = 1 - s^2 - s^(-2).
LaurentS zeta_q();

}  // namespace motzkin

#endif
