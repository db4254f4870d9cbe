#include "motzkin/poly.hpp"

#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace motzkin {

PolyX::PolyX(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

PolyX::PolyX(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

PolyX PolyX::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("PolyX: negative degree");
    if (c.is_zero()) return {};
    PolyX p;
    p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

void PolyX::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational PolyX::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

Rational PolyX::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

PolyX PolyX::operator-() const {
    PolyX out(*this);
    for (auto& v : out.c_) v = -v;
    return out;
}

PolyX& PolyX::operator+=(const PolyX& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    strip();
    return *this;
}

PolyX& PolyX::operator-=(const PolyX& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    strip();
    return *this;
}

PolyX operator*(const PolyX& a, const PolyX& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return PolyX(std::move(out));
}

PolyX& PolyX::operator*=(const PolyX& o) { return *this = *this * o; }

PolyX& PolyX::operator*=(const Rational& c) {
    if (c.is_zero()) { c_.clear(); return *this; }
    for (auto& v : c_) v *= c;
    return *this;
}

bool PolyX::operator<(const PolyX& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

void PolyX::divmod(const PolyX& d, PolyX& q, PolyX& r) const {
    if (d.is_zero()) throw std::domain_error("PolyX: division by zero polynomial");
    q = PolyX();
    r = *this;
    const Rational lead = d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Rational f = r.leading() / lead;
        q += PolyX::monomial(shift, f);
        r -= PolyX::monomial(shift, f) * d;
    }
}

PolyX PolyX::exact_div(const PolyX& d) const {
    PolyX q, r;
    divmod(d, q, r);
    if (!r.is_zero()) throw std::domain_error("PolyX: inexact division");
    return q;
}

PolyX PolyX::pow(int e) const {
    if (e < 0) throw std::invalid_argument("PolyX: negative power");
    PolyX out(Rational(1));
    PolyX base(*this);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

Rational PolyX::eval(const Rational& v) const {
    Rational out(0);
    for (size_t i = c_.size(); i-- > 0;) out = out * v + c_[i];
    return out;
}

double PolyX::eval(double v) const {
    double out = 0.0;
    for (size_t i = c_.size(); i-- > 0;) out = out * v + c_[i].to_double();
    return out;
}

PolyX PolyX::compose(const PolyX& g) const {
    PolyX out;
    for (size_t i = c_.size(); i-- > 0;) out = out * g + PolyX(c_[i]);
    return out;
}

PolyX PolyX::monic() const {
    if (is_zero()) return {};
    PolyX out(*this);
    Rational inv = Rational(1) / leading();
    for (auto& v : out.c_) v *= inv;
    return out;
}

std::string PolyX::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational a = c.abs();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string var = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (var.empty()) {
            out += a.str();
        } else if (a.is_one()) {
            out += var;
        } else {
            out += a.str() + "*" + var;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PolyX& p) { return os << p.str(); }

PolyX poly_gcd(PolyX a, PolyX b) {
    while (!b.is_zero()) {
        PolyX q, r;
        a.divmod(b, q, r);
        a = b;
        b = r;
    }
    return a.monic();
}

PolyX chebyshev_u(int n) {
    if (n < 0) throw std::invalid_argument("chebyshev_u: negative index");
    static std::mutex mtx;
    static std::vector<PolyX> cache;
    std::lock_guard<std::mutex> lock(mtx);
    if (cache.empty()) {
        cache.push_back(PolyX(Rational(1)));
        cache.push_back(PolyX::x());
    }
    while (static_cast<int>(cache.size()) <= n) {
        size_t m = cache.size();
        cache.push_back(PolyX::x() * cache[m - 1] - cache[m - 2]);
    }
    return cache[static_cast<size_t>(n)];
}

PolyX chebyshev_u_shifted(int n) {
    static const PolyX x_minus_1 = PolyX::x() - PolyX(Rational(1));
    return chebyshev_u(n).compose(x_minus_1);
}

std::vector<double> chebyshev_shifted_roots(int n) {
    if (n < 1) throw std::invalid_argument("chebyshev_shifted_roots: n must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    for (int m = 1; m <= n; ++m)
        out.push_back(2.0 * std::cos(M_PI * m / (n + 1)) + 1.0);
    return out;
}

}  // namespace motzkin
