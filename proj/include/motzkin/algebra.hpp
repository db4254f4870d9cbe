#ifndef MOTZKIN_ALGEBRA_HPP
#define MOTZKIN_ALGEBRA_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "motzkin/diagram.hpp"
#include "motzkin/matrix.hpp"
#include "motzkin/rational.hpp"

namespace motzkin {

template <class R>
R ring_pow(const R& base, int e) {
    if (e < 0) throw std::invalid_argument("ring_pow: negative exponent");
    R out(1);
    R b = base;
    while (e > 0) {
        if (e & 1) out = out * b;
        b = b * b;
        e >>= 1;
    }
    return out;
}

/// Formal linear combination of Motzkin diagrams of a common size over an
/// exact scalar ring R.  No zero coefficients are stored.
template <class R>
class AlgebraElement {
public:
    explicit AlgebraElement(int k) : k_(k) {}
    AlgebraElement(const MotzkinDiagram& d, R coeff = R(1)) : k_(d.size()) {
        add_term(d, std::move(coeff));
    }

    int size() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }
    const std::map<MotzkinDiagram, R>& terms() const { return terms_; }

    R coeff(const MotzkinDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? R(0) : it->second;
    }

    void add_term(const MotzkinDiagram& d, R c) {
        if (d.size() != k_) throw std::invalid_argument("AlgebraElement: size mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement operator-() const {
        AlgebraElement out(k_);
        for (const auto& [d, c] : terms_) out.terms_.emplace(d, R(0) - c);
        return out;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        require_same(o);
        for (const auto& [d, c] : o.terms_) accumulate(d, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        require_same(o);
        for (const auto& [d, c] : o.terms_) accumulate(d, R(0) - c);
        return *this;
    }
    AlgebraElement& operator*=(const R& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [d, v] : terms_) v = v * c;
        prune();
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const R& c) { return a *= c; }
    friend AlgebraElement operator*(const R& c, AlgebraElement a) { return a *= c; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c << ")*" << d.str();
            first = false;
        }
        return os.str();
    }

private:
    void require_same(const AlgebraElement& o) const {
        if (k_ != o.k_) throw std::invalid_argument("AlgebraElement: size mismatch");
    }
    void accumulate(const MotzkinDiagram& d, const R& c) {
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(d, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    int k_;
    std::map<MotzkinDiagram, R> terms_;
};

/// Linear extension of the diagram involution; an anti-automorphism of
/// order 2.
template <class R>
AlgebraElement<R> involution(const AlgebraElement<R>& a) {
    AlgebraElement<R> out(a.size());
    for (const auto& [d, c] : a.terms()) out.add_term(d.involution(), c);
    return out;
}

/// Bilinear product with loop factor x^kappa, x being the algebra parameter.
template <class R>
AlgebraElement<R> elem_mul(const AlgebraElement<R>& a, const AlgebraElement<R>& b, const R& x) {
    if (a.size() != b.size()) throw std::invalid_argument("elem_mul: size mismatch");
    AlgebraElement<R> out(a.size());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            DiagramProduct p = multiply(da, db);
            out.add_term(p.diagram, ca * cb * ring_pow(x, p.loops));
        }
    return out;
}

template <class R>
AlgebraElement<R> elem_mul(const MotzkinDiagram& a, const MotzkinDiagram& b, const R& x) {
    return elem_mul(AlgebraElement<R>(a), AlgebraElement<R>(b), x);
}

/// Drops every diagram term of rank <= r; the result represents the coset in
/// M_k(x) / J_r.  r = -1 keeps everything, r = k reduces to zero.
template <class R>
AlgebraElement<R> reduce_mod_J(const AlgebraElement<R>& a, int r) {
    AlgebraElement<R> out(a.size());
    for (const auto& [d, c] : a.terms())
        if (d.rank() > r) out.add_term(d, c);
    return out;
}

/// The Jones idempotent e_k = (1/x) t_{k-1} at a specialized parameter.
AlgebraElement<Rational> jones_idempotent(int k, const Rational& x_val);

/// Embeds d in M_{k-2}(x) as e_k (d + two identity strands) e_k in M_k(x).
AlgebraElement<Rational> basic_construction_embed(const MotzkinDiagram& d, int k,
                                                  const Rational& x_val);

/// Appends identity strands on the right: M_j(x) -> M_k(x).
MotzkinDiagram embed_with_strands(const MotzkinDiagram& d, int k);

/// Verifies d_q^p d_t^s = delta_{q,s} d_t^p mod J_{k-2} over all rank-(k-1)
/// paths, and that the quotient has dimension k^2 + 1.
bool matrix_unit_check(int k);

/// Dimension of M_k / J_{k-2} read off the rank-filtered diagram basis.
int quotient_dimension(int k);

/// Coefficient table mu_a(q', q) of a d_p^q = sum mu_a(q',q) d_p^{q'}
/// mod J_{r-1}; rows/columns are indexed by enumerate_paths(k, r).
template <class R>
Matrix<R> cell_coefficient_table(const AlgebraElement<R>& a, int r, const MotzkinPath& p,
                                 const R& x) {
    const int k = a.size();
    if (p.length() != k || p.rank() != r)
        throw std::invalid_argument("cell_coefficient_table: bad bottom path");
    const auto paths = enumerate_paths(k, r);
    std::map<MotzkinPath, int> index;
    for (size_t i = 0; i < paths.size(); ++i) index.emplace(paths[i], static_cast<int>(i));
    const int n = static_cast<int>(paths.size());
    Matrix<R> mu(n, n, R(0));
    for (int j = 0; j < n; ++j) {
        AlgebraElement<R> prod =
            elem_mul(a, AlgebraElement<R>(diagram_from_paths(p, paths[j])), x);
        const AlgebraElement<R> reduced = reduce_mod_J(prod, r - 1);
        for (const auto& [d, c] : reduced.terms()) {
            if (d.rank() != r)
                throw std::logic_error("cell_coefficient_table: unexpected rank in coset");
            if (bottom_path(d) != p)
                throw std::logic_error("cell_coefficient_table: bottom row was disturbed");
            mu(index.at(top_path(d)), j) = c;
        }
    }
    return mu;
}

}  // namespace motzkin

#endif
