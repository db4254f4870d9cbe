#ifndef MOTZKIN_CELLMOD_HPP
#define MOTZKIN_CELLMOD_HPP

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "motzkin/algebra.hpp"
#include "motzkin/diagram.hpp"
#include "motzkin/linalg.hpp"
#include "motzkin/poly.hpp"
#include "motzkin/ratfn.hpp"

namespace motzkin {

/// Raw action of a diagram on a Motzkin path (in the unfiltered path module):
/// d p = x^loops q with no rank bookkeeping.
struct PathAction {
    int loops = 0;
    MotzkinPath path;
};
PathAction act_on_path(const MotzkinDiagram& d, const MotzkinPath& p);

/// Finite linear combination of Motzkin paths of a common length and rank.
template <class R>
class PathVector {
public:
    PathVector(int k, int r) : k_(k), r_(r) {}
    PathVector(const MotzkinPath& p, R coeff = R(1)) : k_(p.length()), r_(p.rank()) {
        add_term(p, std::move(coeff));
    }

    int length() const { return k_; }
    int rank() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MotzkinPath, R>& terms() const { return terms_; }
    R coeff(const MotzkinPath& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? R(0) : it->second;
    }

    void add_term(const MotzkinPath& p, R c) {
        if (p.length() != k_ || p.rank() != r_)
            throw std::invalid_argument("PathVector: path outside the module");
        if (c.is_zero()) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PathVector& operator+=(const PathVector& o) {
        check(o);
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }
    PathVector& operator-=(const PathVector& o) {
        check(o);
        for (const auto& [p, c] : o.terms_) add_term(p, R(0) - c);
        return *this;
    }
    PathVector& operator*=(const R& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, v] : terms_) v = v * c;
        return *this;
    }
    friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
    friend PathVector operator-(PathVector a, const PathVector& b) { return a -= b; }
    friend PathVector operator*(PathVector a, const R& c) { return a *= c; }
    friend PathVector operator*(const R& c, PathVector a) { return a *= c; }
    friend bool operator==(const PathVector& a, const PathVector& b) {
        return a.k_ == b.k_ && a.r_ == b.r_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PathVector& a, const PathVector& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c << ")*" << p.str();
            first = false;
        }
        return os.str();
    }

private:
    void check(const PathVector& o) const {
        if (k_ != o.k_ || r_ != o.r_) throw std::invalid_argument("PathVector: module mismatch");
    }
    int k_, r_;
    std::map<MotzkinPath, R> terms_;
};

/// Action in the cell module C_k^(r): x^loops q when the rank survives,
/// zero otherwise.
template <class R>
PathVector<R> cell_act(const MotzkinDiagram& d, const MotzkinPath& p, const R& x) {
    PathVector<R> out(p.length(), p.rank());
    PathAction a = act_on_path(d, p);
    if (a.path.rank() == p.rank()) out.add_term(a.path, ring_pow(x, a.loops));
    return out;
}

template <class R>
PathVector<R> cell_act(const MotzkinDiagram& d, const PathVector<R>& v, const R& x) {
    PathVector<R> out(v.length(), v.rank());
    for (const auto& [p, c] : v.terms()) {
        PathAction a = act_on_path(d, p);
        if (a.path.rank() == p.rank()) out.add_term(a.path, c * ring_pow(x, a.loops));
    }
    return out;
}

template <class R>
PathVector<R> cell_act(const AlgebraElement<R>& a, const PathVector<R>& v, const R& x) {
    PathVector<R> out(v.length(), v.rank());
    for (const auto& [d, cd] : a.terms()) {
        PathVector<R> part = cell_act(d, v, x);
        part *= cd;
        out += part;
    }
    return out;
}

/// Trace of 1_{l,k} on C_k^(r); equals m_{l,r} for r <= l and 0 otherwise.
BigInt character(int k, int r, int l);

/// Cellular bilinear form <p, q>: x^kappa from d_p^p d_q^q when the product
/// keeps rank r, zero otherwise.
PolyX bilinear(const MotzkinPath& p, const MotzkinPath& q);

struct GramMatrix {
    int k = 0, r = 0;
    std::vector<MotzkinPath> paths;  // cell-basis order
    Matrix<PolyX> entries;
};
GramMatrix gram_matrix(int k, int r);

/// A 1-factor with a distinguished (pivot) horizontal edge; the intermediate
/// state of the basis-change recursion.
struct PivotedFactor {
    OneFactor factor;
    std::pair<int, int> pivot;  // an edge of factor

    int whites_left_of_pivot() const;
};

/// Initial pivot state for a path ending in -1 (pivot edge ends at vertex k).
PivotedFactor pivoted(const MotzkinPath& p);
/// The pivot edge deleted, both endpoints turning into isolated vertices.
MotzkinPath remove_pivot(const PivotedFactor& pf);
/// The pivot edge replaced by two white vertices (rank goes up by 2).
MotzkinPath whiten_pivot(const PivotedFactor& pf);
/// The pivot moved left: edge {a,b} removed, edge {w,a} added for the
/// rightmost white w < a, vertex b turning white.  Empty when no such white.
std::optional<PivotedFactor> shift_pivot(const PivotedFactor& pf);

/// The basis-change element [p] over rational functions.
PathVector<RatFnX> bracket_vector(const MotzkinPath& p);
PathVector<RatFnX> bracket_vector(const PivotedFactor& pf);

/// Whether the pivot edge closes a middle-row loop in d_p^p d_q^q.
bool pivot_in_inner_loop(const PivotedFactor& pf, const MotzkinPath& q);

/// Verifies the block diagonalization of the Gram matrix on the bracket
/// basis: blocks G_{k-1}^(r-1), G_{k-1}^(r), (u_{r+1}/u_r)(x-1) G_{k-1}^(r+1)
/// with zero off-diagonal blocks.
bool gram_block_check(int k, int r);

/// Determinant of G_k^(r) by fraction-free elimination over Q[x].
PolyX gram_det_direct(int k, int r);
/// Independent determinant route: evaluation at rational points followed by
/// interpolation.
PolyX gram_det_interpolated(int k, int r);
/// The closed product formula, certified to reduce to a polynomial; throws
/// std::domain_error if the rational-function product fails to reduce.
PolyX gram_det_formula(int k, int r);

struct SemisimplicityReport {
    bool semisimple = false;
    std::vector<int> failing_j;  // j in 1..k-1 with u_j(x-1) = 0
};
SemisimplicityReport is_semisimple(int k, const Rational& x_val);

/// Verifies the restriction rule for M_{k-1} inside M_k on C_k^(r):
/// truncation sorts the basis into the three summands with matching
/// cardinalities and intertwines the action of embedded diagrams.
bool restriction_check(int k, int r);
/// Same check against a caller-chosen set of (k-1)-diagrams.
bool restriction_check(int k, int r, const std::vector<MotzkinDiagram>& small_diagrams);

}  // namespace motzkin

#endif
