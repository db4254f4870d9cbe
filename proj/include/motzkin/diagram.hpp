#ifndef MOTZKIN_DIAGRAM_HPP
#define MOTZKIN_DIAGRAM_HPP

#include <string>
#include <utility>
#include <vector>

#include "motzkin/combinatorics.hpp"

namespace motzkin {

/// A Motzkin k-diagram: a planar partial matching on two rows of k vertices.
/// Vertices are indexed 0..k-1 (top row, left to right) and k..2k-1 (bottom
/// row, left to right); partner(v) is the matched vertex or `none`.
/// Planarity is non-crossing in the circular order top left-to-right followed
/// by bottom right-to-left.
class MotzkinDiagram {
public:
    static constexpr int none = -1;

    /// Validates raw partner data and builds the diagram.  Throws
    /// std::invalid_argument with a distinct message for a non-involution,
    /// a fixed point, or crossing edges.
    static MotzkinDiagram validate(int k, std::vector<int> partner);

    static MotzkinDiagram identity(int k);

    int size() const { return k_; }
    int partner(int v) const { return partner_.at(static_cast<size_t>(v)); }
    const std::vector<int>& partners() const { return partner_; }

    int top_index(int i) const { return i; }           // 0-based position in top row
    int bottom_index(int j) const { return k_ + j; }   // 0-based position in bottom row

    /// Number of vertical (propagating) edges.
    int rank() const;
    int edge_count() const;

    /// Edge lists with 0-based row-local indices; arcs as (left, right),
    /// verticals as (top, bottom).
    std::vector<std::pair<int, int>> top_arcs() const;
    std::vector<std::pair<int, int>> bottom_arcs() const;
    std::vector<std::pair<int, int>> verticals() const;

    /// Row swap; an algebra anti-automorphism of order 2 on linear spans.
    MotzkinDiagram involution() const;

    friend bool operator==(const MotzkinDiagram& a, const MotzkinDiagram& b) {
        return a.k_ == b.k_ && a.partner_ == b.partner_;
    }
    friend bool operator!=(const MotzkinDiagram& a, const MotzkinDiagram& b) {
        return !(a == b);
    }
    bool operator<(const MotzkinDiagram& o) const {
        if (k_ != o.k_) return k_ < o.k_;
        return partner_ < o.partner_;
    }

    std::string str() const;        // compact edge list
    std::string ascii_art() const;  // two-row picture

private:
    MotzkinDiagram(int k, std::vector<int> partner)
        : k_(k), partner_(std::move(partner)) {}

    int k_ = 0;
    std::vector<int> partner_;

    friend class DiagramBuilder;
};

/// Mutable helper used internally for assembling diagrams edge by edge.
class DiagramBuilder {
public:
    explicit DiagramBuilder(int k)
        : k_(k), partner_(static_cast<size_t>(2 * k), MotzkinDiagram::none) {}
    void connect(int u, int v);
    void connect_top_arc(int i, int j) { connect(i, j); }
    void connect_bottom_arc(int i, int j) { connect(k_ + i, k_ + j); }
    void connect_vertical(int top, int bottom) { connect(top, k_ + bottom); }
    /// Skips planarity revalidation; callers construct planar data by design.
    MotzkinDiagram build_unchecked() &&;
    MotzkinDiagram build_checked() &&;

private:
    int k_;
    std::vector<int> partner_;
};

struct DiagramProduct {
    int loops = 0;  // closed middle-row cycles
    MotzkinDiagram diagram;
};

/// Diagram product d1 d2 = x^loops d3: stack d1 over d2, trace the 3k-vertex
/// union graph, keep d1's top arcs, d2's bottom arcs and the propagating
/// verticals; loops counts the closed middle cycles.
DiagramProduct multiply(const MotzkinDiagram& d1, const MotzkinDiagram& d2);

/// All Motzkin k-diagrams (count M_{2k}), sorted lexicographically on the
/// partner sequence.
std::vector<MotzkinDiagram> enumerate_diagrams(int k);

// Named generator diagrams (1-based positions, matching the usual pictures).
MotzkinDiagram gen_t(int k, int i);              // arcs {i,i+1} in both rows
MotzkinDiagram gen_r(int k, int i);              // bottom i -> top i+1
MotzkinDiagram gen_l(int k, int i);              // bottom i+1 -> top i
MotzkinDiagram gen_p(int k, int i);              // vertex i isolated in both rows
MotzkinDiagram identity_partial(int k, int l);   // 1_{l,k}: l strands then isolated
MotzkinDiagram gen_r_chain(int k, int i, int j); // r_{i,j} = r_{i-1} ... r_j, j <= i

struct DiagramClass {
    bool temperley_lieb = false;  // k edges
    bool right_planar = false;    // no horizontal edges, verticals lean right
    bool left_planar = false;     // mirror condition
};
DiagramClass classify(const MotzkinDiagram& d);

struct RTLFactors {
    MotzkinDiagram r, t, l;
};

/// Factors d = r t l with r right-planar, t Temperley-Lieb, l left-planar and
/// no loops produced on recomposition.  The Temperley-Lieb factor compresses
/// the non-isolated vertices to the left, pads the short row with adjacent
/// arcs over the leftmost free slots, and finishes with identity strands.
RTLFactors factor_rtl(const MotzkinDiagram& d);

/// The diagram d_p^q for equal-rank paths: bottom arcs from p, top arcs from
/// q, and the i-th white vertex of p joined to the i-th white vertex of q.
MotzkinDiagram diagram_from_paths(const MotzkinPath& bottom_p, const MotzkinPath& top_q);

/// Reads one row of a diagram back as a path: arcs stay arcs and vertical
/// endpoints become white vertices.
MotzkinPath top_path(const MotzkinDiagram& d);
MotzkinPath bottom_path(const MotzkinDiagram& d);

}  // namespace motzkin

#endif
