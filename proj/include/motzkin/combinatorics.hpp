#ifndef MOTZKIN_COMBINATORICS_HPP
#define MOTZKIN_COMBINATORICS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/rational.hpp"

namespace motzkin {

/// Motzkin number M_n via the convolution recurrence
/// M_n = M_{n-1} + sum_{i=0}^{n-2} M_i M_{n-2-i}.
BigInt motzkin_number(int n);

/// Catalan number C_n = binom(2n, n) / (n+1).
BigInt catalan(int n);

/// Number m_{k,r} of Motzkin paths of length k and rank r, via the
/// three-term recursion m_{k,r} = m_{k-1,r-1} + m_{k-1,r} + m_{k-1,r+1}.
/// Returns 0 outside 0 <= r <= k.
BigInt m_count(int k, int r);

/// The same count through Temperley-Lieb module dimensions:
/// sum_l binom(k, r+2l) * (binom(r+2l, l) - binom(r+2l, l-1)).
BigInt m_via_temperley_lieb(int k, int r);

/// A walk of k steps in {-1, 0, +1} whose prefix sums stay nonnegative.
/// The rank is the total sum.
class MotzkinPath {
public:
    explicit MotzkinPath(std::vector<int8_t> steps);

    int length() const { return static_cast<int>(steps_.size()); }
    int rank() const;
    int8_t step(int i) const { return steps_.at(static_cast<size_t>(i)); }  // 0-based
    const std::vector<int8_t>& steps() const { return steps_; }

    /// Replaces step i (0-based) without revalidating; caller keeps invariants.
    MotzkinPath with_step(int i, int8_t value) const;
    MotzkinPath truncated() const;  // drop the last step

    friend bool operator==(const MotzkinPath& a, const MotzkinPath& b) {
        return a.steps_ == b.steps_;
    }
    friend bool operator!=(const MotzkinPath& a, const MotzkinPath& b) { return !(a == b); }

    /// The cell-basis order: p < q iff the last step of p exceeds that of q,
    /// with ties broken on the length-(k-1) prefixes.  Shorter paths first so
    /// that this is a total order usable for containers.
    bool operator<(const MotzkinPath& o) const;

    std::string str() const;

private:
    std::vector<int8_t> steps_;
};

std::ostream& operator<<(std::ostream& os, const MotzkinPath& p);

/// All Motzkin paths of length k and rank r, in the cell-basis order.
std::vector<MotzkinPath> enumerate_paths(int k, int r);

/// All Motzkin paths of length k, grouped by increasing rank.
std::vector<MotzkinPath> enumerate_paths(int k);

/// Single-row colored encoding of a Motzkin path: white vertices are the
/// unpaired +1 steps, edges pair the matched (+1, -1) steps.  Vertices are
/// 1-based, left to right.
struct OneFactor {
    int k = 0;
    std::vector<int> whites;                    // ascending
    std::vector<std::pair<int, int>> edges;     // (i, j) with i < j, sorted by i

    int rank() const { return static_cast<int>(whites.size()); }
    bool is_white(int v) const;
    /// Throws std::invalid_argument if the factor breaks an invariant
    /// (crossing edges, white vertex under an edge, bad indices).
    void validate() const;

    friend bool operator==(const OneFactor& a, const OneFactor& b) {
        return a.k == b.k && a.whites == b.whites && a.edges == b.edges;
    }
};

OneFactor path_to_factor(const MotzkinPath& p);
MotzkinPath factor_to_path(const OneFactor& f);

}  // namespace motzkin

#endif
