#include "motzkin/laurent.hpp"

#include <ostream>
#include <stdexcept>

namespace motzkin {

LaurentS::LaurentS(const Rational& constant) {
    if (!constant.is_zero()) c_[0] = constant;
}

LaurentS LaurentS::s_power(int e) {
    LaurentS out;
    out.c_[e] = Rational(1);
    return out;
}

bool LaurentS::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
}

Rational LaurentS::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
}

int LaurentS::min_exponent() const {
    if (c_.empty()) throw std::domain_error("LaurentS: zero has no exponents");
    return c_.begin()->first;
}

int LaurentS::max_exponent() const {
    if (c_.empty()) throw std::domain_error("LaurentS: zero has no exponents");
    return c_.rbegin()->first;
}

LaurentS LaurentS::operator-() const {
    LaurentS out(*this);
    for (auto& [e, v] : out.c_) v = -v;
    return out;
}

LaurentS& LaurentS::operator+=(const LaurentS& o) {
    for (const auto& [e, v] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

LaurentS& LaurentS::operator-=(const LaurentS& o) { return *this += -o; }

LaurentS operator*(const LaurentS& a, const LaurentS& b) {
    LaurentS out;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            Rational prod = va * vb;
            auto it = out.c_.find(ea + eb);
            if (it == out.c_.end()) {
                out.c_.emplace(ea + eb, prod);
            } else {
                it->second += prod;
            }
        }
    for (auto it = out.c_.begin(); it != out.c_.end();)
        it = it->second.is_zero() ? out.c_.erase(it) : std::next(it);
    return out;
}

LaurentS& LaurentS::operator*=(const LaurentS& o) { return *this = *this * o; }

LaurentS& LaurentS::operator*=(const Rational& c) {
    if (c.is_zero()) { c_.clear(); return *this; }
    for (auto& [e, v] : c_) v *= c;
    return *this;
}

LaurentS LaurentS::pow(int e) const {
    if (e < 0) throw std::invalid_argument("LaurentS: negative power of a non-unit");
    LaurentS out{Rational(1)};
    LaurentS base(*this);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

LaurentS LaurentS::invert_s() const {
    LaurentS out;
    for (const auto& [e, v] : c_) out.c_[-e] = v;
    return out;
}

Rational LaurentS::eval(const Rational& s_val) const {
    if (s_val.is_zero() && !c_.empty() && min_exponent() < 0)
        throw std::domain_error("LaurentS: evaluation at s = 0");
    Rational out(0);
    for (const auto& [e, v] : c_) out += v * s_val.pow(e);
    return out;
}

std::string LaurentS::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const int e = it->first;
        const Rational& c = it->second;
        bool neg = c.sign() < 0;
        Rational a = c.abs();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string var = e == 0 ? "" : (e == 1 ? "s" : "s^" + std::to_string(e));
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

std::ostream& operator<<(std::ostream& os, const LaurentS& v) { return os << v.str(); }

LaurentS zeta_q() {
    return LaurentS(Rational(1)) - LaurentS::s_power(2) - LaurentS::s_power(-2);
}

}  // namespace motzkin
