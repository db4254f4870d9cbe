#ifndef MOTZKIN_POLY_HPP
#define MOTZKIN_POLY_HPP

#include <string>
#include <vector>

#include "motzkin/rational.hpp"

namespace motzkin {

/// Univariate polynomial in x over the rationals, stored densely by exponent
/// with trailing zeros stripped.  The zero polynomial has degree -1.
class PolyX {
public:
    PolyX() = default;
    PolyX(const Rational& constant);  // NOLINT: implicit by design
    PolyX(long constant) : PolyX(Rational(constant)) {}
    explicit PolyX(std::vector<Rational> coeffs);

    static PolyX x() { return monomial(1, Rational(1)); }
    static PolyX monomial(int degree, const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    Rational coeff(int i) const;
    Rational leading() const;

    PolyX operator-() const;
    PolyX& operator+=(const PolyX& o);
    PolyX& operator-=(const PolyX& o);
    PolyX& operator*=(const PolyX& o);
    PolyX& operator*=(const Rational& c);

    friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
    friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
    friend PolyX operator*(const PolyX& a, const PolyX& b);
    friend PolyX operator*(PolyX a, const Rational& c) { return a *= c; }
    friend PolyX operator*(const Rational& c, PolyX a) { return a *= c; }

    friend bool operator==(const PolyX& a, const PolyX& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyX& a, const PolyX& b) { return !(a == b); }
    bool operator<(const PolyX& o) const;  // container ordering only

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    void divmod(const PolyX& d, PolyX& q, PolyX& r) const;
    /// Division that must be exact; throws std::domain_error on a remainder.
    PolyX exact_div(const PolyX& d) const;

    PolyX pow(int e) const;
    Rational eval(const Rational& v) const;
    double eval(double v) const;
    /// Substitution x -> g(x).
    PolyX compose(const PolyX& g) const;

    PolyX monic() const;

    std::string str() const;

private:
    void strip();
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const PolyX& p);

/// Monic gcd (Euclidean algorithm over the rationals).
PolyX poly_gcd(PolyX a, PolyX b);

/// Chebyshev-derived polynomials u_n with u_0 = 1, u_1 = x and
/// u_n = x u_{n-1} - u_{n-2}; by convention u_{-1} = 0.
PolyX chebyshev_u(int n);

/// The shifted polynomial u_n(x-1).
PolyX chebyshev_u_shifted(int n);

/// Roots of u_n(x-1): 2 cos(pi m/(n+1)) + 1 for m = 1..n, in increasing m.
std::vector<double> chebyshev_shifted_roots(int n);

}  // namespace motzkin

#endif
