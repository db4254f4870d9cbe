#ifndef MOTZKIN_SCHURWEYL_HPP
#define MOTZKIN_SCHURWEYL_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "motzkin/algebra.hpp"
#include "motzkin/diagram.hpp"
#include "motzkin/laurent.hpp"

namespace motzkin {

/// Index tuple (i_1, ..., i_k) with entries in {-1, 0, +1}, labelling the
/// simple tensors v_{i_1} x ... x v_{i_k}.
using Tuple = std::vector<int8_t>;

std::vector<Tuple> all_tuples(int k);
std::string tuple_str(const Tuple& t);

/// Bilinear form weights on V: <v_{-1}, v_1>_t = s^-1, <v_0, v_0>_t = 1,
/// <v_1, v_{-1}>_t = -s; zero otherwise.
LaurentS form_top(int a, int b);
/// Bottom-row variant: <v_{-1}, v_1>_b = -s^-1, <v_0, v_0>_b = 1,
/// <v_1, v_{-1}>_b = s.
LaurentS form_bot(int a, int b);

template <class R>
class TensorVector {
public:
    explicit TensorVector(int k) : k_(k) {}

    int length() const { return k_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Tuple, R>& terms() const { return c_; }
    R coeff(const Tuple& t) const {
        auto it = c_.find(t);
        return it == c_.end() ? R(0) : it->second;
    }

    void add_term(const Tuple& t, R c) {
        if (static_cast<int>(t.size()) != k_)
            throw std::invalid_argument("TensorVector: tuple length mismatch");
        if (c.is_zero()) return;
        auto it = c_.find(t);
        if (it == c_.end()) {
            c_.emplace(t, std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    TensorVector& operator+=(const TensorVector& o) {
        for (const auto& [t, c] : o.c_) add_term(t, c);
        return *this;
    }
    TensorVector& operator-=(const TensorVector& o) {
        for (const auto& [t, c] : o.c_) add_term(t, R(0) - c);
        return *this;
    }
    TensorVector& operator*=(const R& c) {
        if (c.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& [t, v] : c_) v = v * c;
        return *this;
    }
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(TensorVector a, const R& c) { return a *= c; }
    friend TensorVector operator*(const R& c, TensorVector a) { return a *= c; }
    friend bool operator==(const TensorVector& a, const TensorVector& b) {
        return a.k_ == b.k_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TensorVector& a, const TensorVector& b) { return !(a == b); }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [t, c] : c_) {
            if (!first) os << " + ";
            os << "(" << c << ") * " << tuple_str(t);
            first = false;
        }
        return os.str();
    }

private:
    int k_;
    std::map<Tuple, R> c_;
};

/// Sparse linear operator on V^(x k), stored column-wise:
/// input tuple -> (output tuple -> coefficient).
template <class R>
class TensorOperator {
public:
    explicit TensorOperator(int k) : k_(k) {}

    static TensorOperator identity(int k) {
        TensorOperator out(k);
        for (const auto& t : all_tuples(k)) out.add_entry(t, t, R(1));
        return out;
    }

    int length() const { return k_; }
    bool is_zero() const { return cols_.empty(); }
    const std::map<Tuple, std::map<Tuple, R>>& columns() const { return cols_; }

    void add_entry(const Tuple& in, const Tuple& out, R c) {
        if (c.is_zero()) return;
        auto& col = cols_[in];
        auto it = col.find(out);
        if (it == col.end()) {
            col.emplace(out, std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) {
                col.erase(it);
                if (col.empty()) cols_.erase(in);
            }
        }
    }

    R entry(const Tuple& in, const Tuple& out) const {
        auto cit = cols_.find(in);
        if (cit == cols_.end()) return R(0);
        auto it = cit->second.find(out);
        return it == cit->second.end() ? R(0) : it->second;
    }

    TensorVector<R> apply(const TensorVector<R>& v) const {
        TensorVector<R> out(k_);
        for (const auto& [t, c] : v.terms()) {
            auto cit = cols_.find(t);
            if (cit == cols_.end()) continue;
            for (const auto& [u, w] : cit->second) out.add_term(u, w * c);
        }
        return out;
    }

    /// Composition (this o other)(v) = this(other(v)).
    TensorOperator compose(const TensorOperator& other) const {
        TensorOperator out(k_);
        for (const auto& [in, col] : other.cols_)
            for (const auto& [mid, c1] : col) {
                auto cit = cols_.find(mid);
                if (cit == cols_.end()) continue;
                for (const auto& [fin, c2] : cit->second) out.add_entry(in, fin, c2 * c1);
            }
        return out;
    }

    TensorOperator& operator+=(const TensorOperator& o) {
        for (const auto& [in, col] : o.cols_)
            for (const auto& [out_t, c] : col) add_entry(in, out_t, c);
        return *this;
    }
    TensorOperator& operator-=(const TensorOperator& o) {
        for (const auto& [in, col] : o.cols_)
            for (const auto& [out_t, c] : col) add_entry(in, out_t, R(0) - c);
        return *this;
    }
    TensorOperator& operator*=(const R& c) {
        if (c.is_zero()) {
            cols_.clear();
            return *this;
        }
        for (auto& [in, col] : cols_)
            for (auto& [out_t, v] : col) v = v * c;
        return *this;
    }
    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
    friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
    friend TensorOperator operator*(TensorOperator a, const R& c) { return a *= c; }
    friend TensorOperator operator*(const R& c, TensorOperator a) { return a *= c; }
    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.k_ == b.k_ && a.cols_ == b.cols_;
    }
    friend bool operator!=(const TensorOperator& a, const TensorOperator& b) { return !(a == b); }

    TensorOperator commutator(const TensorOperator& o) const {
        return compose(o) - o.compose(*this);
    }

private:
    int k_;
    std::map<Tuple, std::map<Tuple, R>> cols_;
};

/// The tensor-space representation pi_k of a diagram, with matrix entries
/// given by products of component weights.
TensorOperator<LaurentS> diagram_operator(const MotzkinDiagram& d);

enum class LocalKind { T, L, R, P };
/// The local operator id^(i-1) x (T|L|R|P) x id^(rest); equals the
/// diagram operator of the matching generator.
TensorOperator<LaurentS> positioned_operator(LocalKind kind, int k, int i);

enum class QGen { E, F, K1, K2, K1inv, K2inv, K, Kinv };
/// Coproduct-iterated quantum group generators acting on V^(x k).  E acts as
/// sum id^j x E x K^(rest), F as sum (K^-1)^j x F x id^(rest); K1 and K2 act
/// diagonally with s-exponents 2#{+1} + #{0} and 2#{-1} + #{0} (the one-
/// dimensional summand of V carries the half-determinant character, which
/// keeps the full torus action commuting with every diagram operator);
/// K = K1 K2^(-1) has weight q^(sum of entries).
TensorOperator<LaurentS> qgroup_operator(QGen g, int k);

/// Evaluates all coefficients at a nonzero rational s.
TensorOperator<Rational> evaluate(const TensorOperator<LaurentS>& op, const Rational& s_val);
TensorVector<Rational> evaluate(const TensorVector<LaurentS>& v, const Rational& s_val);

/// [pi(g), rho(u)] = 0 for all diagram generators g and quantum generators u.
bool commutation_check(int k);
bool commutation_check_evaluated(int k, const Rational& s_val);

/// pi(d1) pi(d2) = zeta_q^loops pi(d3) for the given diagram pairs.
bool representation_check(const std::vector<std::pair<MotzkinDiagram, MotzkinDiagram>>& pairs);
bool representation_check_evaluated(
    const std::vector<std::pair<MotzkinDiagram, MotzkinDiagram>>& pairs, const Rational& s_val);

/// Rank over Q of the M_{2k} x 9^k matrix of flattened diagram operators at
/// s = s_val; equals M_{2k} at generic s.
int faithfulness_rank(int k, const Rational& s_val);

/// The simple tensor u_p: v_{-1} at left edge endpoints, v_1 at right edge
/// endpoints and whites, v_0 elsewhere.
TensorVector<LaurentS> simple_tensor(const MotzkinPath& p);
/// The highest weight vector w_p = pi(d_p^p) u_p.
TensorVector<LaurentS> highest_weight_vector(const MotzkinPath& p);

/// w_p carries u_p with coefficient (-s^-2)^edges, is killed by E and has
/// K-weight q^rank(p); checked symbolically.
bool highest_weight_claims(const MotzkinPath& p);
/// F applied rank(p) times to w_p is nonzero; one more application kills it.
bool f_string_check(const MotzkinPath& p);
/// Rank over Q of {w_p : p in P_k} evaluated at s = s_val.
int highest_weight_independence_rank(int k, const Rational& s_val);

struct DecompositionReport {
    int k = 0;
    std::vector<BigInt> multiplicities;  // index r = 0..k
    BigInt weighted_dimension = 0;       // sum (r+1) multiplicity, must be 3^k
    bool pass = false;
};
/// Checks that the w_p are K-weight q^rank(p) vectors killed by E, counts
/// them by weight against m_{k,r} and totals the dimension ledger.
DecompositionReport decomposition_audit(int k);

}  // namespace motzkin

#endif
