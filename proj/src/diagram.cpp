#include "motzkin/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace motzkin {

namespace {

// Circular position used by the planarity test: top row left to right, then
// bottom row right to left.
inline int circular_pos(int k, int v) { return v < k ? v : 3 * k - 1 - v; }

}  // namespace

MotzkinDiagram MotzkinDiagram::validate(int k, std::vector<int> partner) {
    if (k < 0) throw std::invalid_argument("MotzkinDiagram: negative size");
    if (partner.size() != static_cast<size_t>(2 * k))
        throw std::invalid_argument("MotzkinDiagram: partner length must be 2k");
    for (int v = 0; v < 2 * k; ++v) {
        int u = partner[static_cast<size_t>(v)];
        if (u == none) continue;
        if (u < 0 || u >= 2 * k)
            throw std::invalid_argument("MotzkinDiagram: partner index out of range");
        if (u == v) throw std::invalid_argument("MotzkinDiagram: fixed point in matching");
        if (partner[static_cast<size_t>(u)] != v)
            throw std::invalid_argument("MotzkinDiagram: partner map is not an involution");
    }
    std::vector<std::pair<int, int>> chords;
    for (int v = 0; v < 2 * k; ++v) {
        int u = partner[static_cast<size_t>(v)];
        if (u == none || u < v) continue;
        int a = circular_pos(k, v), b = circular_pos(k, u);
        chords.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                throw std::invalid_argument("MotzkinDiagram: crossing edges");
        }
    return MotzkinDiagram(k, std::move(partner));
}

MotzkinDiagram MotzkinDiagram::identity(int k) {
    DiagramBuilder b(k);
    for (int i = 0; i < k; ++i) b.connect_vertical(i, i);
    return std::move(b).build_unchecked();
}

int MotzkinDiagram::rank() const {
    int r = 0;
    for (int v = 0; v < k_; ++v)
        if (partner_[static_cast<size_t>(v)] >= k_) ++r;
    return r;
}

int MotzkinDiagram::edge_count() const {
    int n = 0;
    for (int v = 0; v < 2 * k_; ++v)
        if (partner_[static_cast<size_t>(v)] != none) ++n;
    return n / 2;
}

std::vector<std::pair<int, int>> MotzkinDiagram::top_arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < k_; ++v) {
        int u = partner_[static_cast<size_t>(v)];
        if (u != none && u < k_ && v < u) out.emplace_back(v, u);
    }
    return out;
}

std::vector<std::pair<int, int>> MotzkinDiagram::bottom_arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = k_; v < 2 * k_; ++v) {
        int u = partner_[static_cast<size_t>(v)];
        if (u != none && u >= k_ && v < u) out.emplace_back(v - k_, u - k_);
    }
    return out;
}

std::vector<std::pair<int, int>> MotzkinDiagram::verticals() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < k_; ++v) {
        int u = partner_[static_cast<size_t>(v)];
        if (u != none && u >= k_) out.emplace_back(v, u - k_);
    }
    return out;
}

MotzkinDiagram MotzkinDiagram::involution() const {
    DiagramBuilder b(k_);
    for (int v = 0; v < 2 * k_; ++v) {
        int u = partner_[static_cast<size_t>(v)];
        if (u == none || u < v) continue;
        int sv = v < k_ ? v + k_ : v - k_;
        int su = u < k_ ? u + k_ : u - k_;
        b.connect(sv, su);
    }
    return std::move(b).build_unchecked();
}

std::string MotzkinDiagram::str() const {
    std::string out = "M" + std::to_string(k_) + "{";
    bool first = true;
    auto app = [&](const std::string& s) {
        if (!first) out += " ";
        out += s;
        first = false;
    };
    for (auto [a, b] : top_arcs())
        app("T" + std::to_string(a + 1) + "-T" + std::to_string(b + 1));
    for (auto [t, b] : verticals())
        app("T" + std::to_string(t + 1) + "-B" + std::to_string(b + 1));
    for (auto [a, b] : bottom_arcs())
        app("B" + std::to_string(a + 1) + "-B" + std::to_string(b + 1));
    return out + "}";
}

void DiagramBuilder::connect(int u, int v) {
    if (u < 0 || v < 0 || u >= 2 * k_ || v >= 2 * k_ || u == v)
        throw std::invalid_argument("DiagramBuilder: bad edge");
    if (partner_[static_cast<size_t>(u)] != MotzkinDiagram::none ||
        partner_[static_cast<size_t>(v)] != MotzkinDiagram::none)
        throw std::invalid_argument("DiagramBuilder: vertex already matched");
    partner_[static_cast<size_t>(u)] = v;
    partner_[static_cast<size_t>(v)] = u;
}

MotzkinDiagram DiagramBuilder::build_unchecked() && {
    return MotzkinDiagram(k_, std::move(partner_));
}

MotzkinDiagram DiagramBuilder::build_checked() && {
    return MotzkinDiagram::validate(k_, std::move(partner_));
}

DiagramProduct multiply(const MotzkinDiagram& d1, const MotzkinDiagram& d2) {
    const int k = d1.size();
    if (k != d2.size()) throw std::invalid_argument("multiply: size mismatch");

    // Union graph nodes: 0..k-1 product top, k..2k-1 middle, 2k..3k-1 product
    // bottom.  Each node carries at most one d1-edge and one d2-edge.
    const int T = 0, M = k, B = 2 * k;
    std::vector<int> via1(static_cast<size_t>(3 * k), MotzkinDiagram::none);
    std::vector<int> via2(static_cast<size_t>(3 * k), MotzkinDiagram::none);
    for (int v = 0; v < k; ++v) {
        int u = d1.partner(v);
        if (u != MotzkinDiagram::none) via1[static_cast<size_t>(T + v)] = u < k ? T + u : M + (u - k);
    }
    for (int v = k; v < 2 * k; ++v) {
        int u = d1.partner(v);
        if (u != MotzkinDiagram::none)
            via1[static_cast<size_t>(M + (v - k))] = u < k ? T + u : M + (u - k);
    }
    for (int v = 0; v < k; ++v) {
        int u = d2.partner(v);
        if (u != MotzkinDiagram::none) via2[static_cast<size_t>(M + v)] = u < k ? M + u : B + (u - k);
    }
    for (int v = k; v < 2 * k; ++v) {
        int u = d2.partner(v);
        if (u != MotzkinDiagram::none)
            via2[static_cast<size_t>(B + (v - k))] = u < k ? M + u : B + (u - k);
    }

    std::vector<char> visited(static_cast<size_t>(3 * k), 0);
    DiagramBuilder out(k);
    int loops = 0;

    // Walks from `start` leaving along edge set `use_d1` first, alternating
    // between the two edge sets at middle nodes; returns the final node.
    auto walk = [&](int start, bool use_d1) {
        int cur = start;
        bool next1 = use_d1;
        visited[static_cast<size_t>(cur)] = 1;
        while (true) {
            int nxt = next1 ? via1[static_cast<size_t>(cur)] : via2[static_cast<size_t>(cur)];
            if (nxt == MotzkinDiagram::none) return cur;
            cur = nxt;
            visited[static_cast<size_t>(cur)] = 1;
            if (cur < M || cur >= B) return cur;  // reached a product row
            next1 = !next1;
        }
    };

    auto classify_ends = [&](int a, int b) {
        const bool a_top = a < M, b_top = b < M;
        const bool a_bot = a >= B, b_bot = b >= B;
        if (a_top && b_top) out.connect_top_arc(a, b);
        else if (a_bot && b_bot) out.connect_bottom_arc(a - B, b - B);
        else if (a_top && b_bot) out.connect_vertical(a, b - B);
        else if (a_bot && b_top) out.connect_vertical(b, a - B);
        // paths ending at a dead middle vertex contribute nothing
    };

    for (int v = 0; v < k; ++v) {  // components seen from the product top row
        if (!visited[static_cast<size_t>(T + v)] && via1[static_cast<size_t>(T + v)] != MotzkinDiagram::none)
            classify_ends(T + v, walk(T + v, true));
    }
    for (int v = 0; v < k; ++v) {  // remaining components from the product bottom
        if (!visited[static_cast<size_t>(B + v)] && via2[static_cast<size_t>(B + v)] != MotzkinDiagram::none)
            classify_ends(B + v, walk(B + v, false));
    }
    for (int v = 0; v < k; ++v) {  // open middle paths, then closed loops
        int node = M + v;
        if (visited[static_cast<size_t>(node)]) continue;
        bool has1 = via1[static_cast<size_t>(node)] != MotzkinDiagram::none;
        bool has2 = via2[static_cast<size_t>(node)] != MotzkinDiagram::none;
        if (has1 != has2) walk(node, has1);  // dead-end path, nothing produced
    }
    for (int v = 0; v < k; ++v) {
        int node = M + v;
        if (visited[static_cast<size_t>(node)]) continue;
        if (via1[static_cast<size_t>(node)] == MotzkinDiagram::none) continue;
        // every component left over is a closed middle cycle; trace it once
        int cur = node;
        bool next1 = true;
        do {
            visited[static_cast<size_t>(cur)] = 1;
            cur = next1 ? via1[static_cast<size_t>(cur)] : via2[static_cast<size_t>(cur)];
            next1 = !next1;
        } while (cur != node || !next1);
        ++loops;
    }

    return DiagramProduct{loops, std::move(out).build_unchecked()};
}

namespace {

// Non-crossing partial matchings over a stack of disjoint position ranges;
// the leftmost open position is either skipped or matched inside its range,
// which splits the range in two.
void noncrossing_matchings(std::vector<std::pair<int, int>>& ranges,
                           std::vector<std::pair<int, int>>& chords,
                           std::vector<std::vector<std::pair<int, int>>>& out) {
    if (ranges.empty()) {
        out.push_back(chords);
        return;
    }
    auto [a, b] = ranges.back();
    ranges.pop_back();
    if (a > b) {
        noncrossing_matchings(ranges, chords, out);
    } else {
        ranges.emplace_back(a + 1, b);
        noncrossing_matchings(ranges, chords, out);
        ranges.pop_back();
        for (int m = a + 1; m <= b; ++m) {
            chords.emplace_back(a, m);
            ranges.emplace_back(a + 1, m - 1);
            ranges.emplace_back(m + 1, b);
            noncrossing_matchings(ranges, chords, out);
            ranges.pop_back();
            ranges.pop_back();
            chords.pop_back();
        }
    }
    ranges.emplace_back(a, b);
}

}  // namespace

std::vector<MotzkinDiagram> enumerate_diagrams(int k) {
    if (k < 0) throw std::invalid_argument("enumerate_diagrams: negative size");
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> chords;
    std::vector<std::pair<int, int>> ranges{{0, 2 * k - 1}};
    noncrossing_matchings(ranges, chords, matchings);

    std::vector<MotzkinDiagram> out;
    out.reserve(matchings.size());
    for (const auto& m : matchings) {
        std::vector<int> partner(static_cast<size_t>(2 * k), MotzkinDiagram::none);
        auto vertex_of = [&](int pos) { return pos < k ? pos : k + (2 * k - 1 - pos); };
        for (auto [a, b] : m) {
            int u = vertex_of(a), v = vertex_of(b);
            partner[static_cast<size_t>(u)] = v;
            partner[static_cast<size_t>(v)] = u;
        }
        out.push_back(MotzkinDiagram::validate(k, std::move(partner)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void check_gen_index(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi)
        throw std::invalid_argument(std::string(what) + ": index out of range");
}

}  // namespace

MotzkinDiagram gen_t(int k, int i) {
    check_gen_index(i, 1, k - 1, "gen_t");
    DiagramBuilder b(k);
    for (int j = 0; j < k; ++j)
        if (j != i - 1 && j != i) b.connect_vertical(j, j);
    b.connect_top_arc(i - 1, i);
    b.connect_bottom_arc(i - 1, i);
    return std::move(b).build_unchecked();
}

MotzkinDiagram gen_r(int k, int i) {
    check_gen_index(i, 1, k - 1, "gen_r");
    DiagramBuilder b(k);
    for (int j = 0; j < k; ++j)
        if (j != i - 1 && j != i) b.connect_vertical(j, j);
    b.connect_vertical(i, i - 1);  // bottom i climbs to top i+1
    return std::move(b).build_unchecked();
}

MotzkinDiagram gen_l(int k, int i) {
    check_gen_index(i, 1, k - 1, "gen_l");
    DiagramBuilder b(k);
    for (int j = 0; j < k; ++j)
        if (j != i - 1 && j != i) b.connect_vertical(j, j);
    b.connect_vertical(i - 1, i);  // bottom i+1 climbs to top i
    return std::move(b).build_unchecked();
}

MotzkinDiagram gen_p(int k, int i) {
    check_gen_index(i, 1, k, "gen_p");
    DiagramBuilder b(k);
    for (int j = 0; j < k; ++j)
        if (j != i - 1) b.connect_vertical(j, j);
    return std::move(b).build_unchecked();
}

MotzkinDiagram identity_partial(int k, int l) {
    if (l < 0 || l > k) throw std::invalid_argument("identity_partial: bad strand count");
    DiagramBuilder b(k);
    for (int j = 0; j < l; ++j) b.connect_vertical(j, j);
    return std::move(b).build_unchecked();
}

MotzkinDiagram gen_r_chain(int k, int i, int j) {
    check_gen_index(i, 1, k, "gen_r_chain");
    if (j > i) throw std::invalid_argument("gen_r_chain: requires j <= i");
    check_gen_index(j, 1, k, "gen_r_chain");
    if (i == j) return MotzkinDiagram::identity(k);
    DiagramBuilder b(k);
    for (int v = 0; v < j - 1; ++v) b.connect_vertical(v, v);
    for (int v = i; v < k; ++v) b.connect_vertical(v, v);
    b.connect_vertical(i - 1, j - 1);  // bottom j climbs to top i
    return std::move(b).build_unchecked();
}

DiagramClass classify(const MotzkinDiagram& d) {
    DiagramClass c;
    c.temperley_lieb = d.edge_count() == d.size();
    bool no_arcs = d.top_arcs().empty() && d.bottom_arcs().empty();
    c.right_planar = no_arcs;
    c.left_planar = no_arcs;
    if (no_arcs) {
        for (auto [t, b] : d.verticals()) {
            if (b > t) c.right_planar = false;
            if (t > b) c.left_planar = false;
        }
    }
    return c;
}

RTLFactors factor_rtl(const MotzkinDiagram& d) {
    const int k = d.size();
    std::vector<int> top_occ, bot_occ;
    for (int v = 0; v < k; ++v)
        if (d.partner(v) != MotzkinDiagram::none) top_occ.push_back(v);
    for (int v = 0; v < k; ++v)
        if (d.partner(k + v) != MotzkinDiagram::none) bot_occ.push_back(v);

    std::vector<int> shift_top(static_cast<size_t>(k), -1), shift_bot(static_cast<size_t>(k), -1);
    for (size_t q = 0; q < top_occ.size(); ++q) shift_top[static_cast<size_t>(top_occ[q])] = static_cast<int>(q);
    for (size_t q = 0; q < bot_occ.size(); ++q) shift_bot[static_cast<size_t>(bot_occ[q])] = static_cast<int>(q);

    DiagramBuilder rb(k);
    for (size_t q = 0; q < top_occ.size(); ++q) rb.connect_vertical(top_occ[q], static_cast<int>(q));
    DiagramBuilder lb(k);
    for (size_t q = 0; q < bot_occ.size(); ++q) lb.connect_vertical(static_cast<int>(q), bot_occ[q]);

    DiagramBuilder tb(k);
    const auto tarcs = d.top_arcs();
    const auto barcs = d.bottom_arcs();
    for (auto [a, b] : tarcs)
        tb.connect_top_arc(shift_top[static_cast<size_t>(a)], shift_top[static_cast<size_t>(b)]);
    for (auto [a, b] : barcs)
        tb.connect_bottom_arc(shift_bot[static_cast<size_t>(a)], shift_bot[static_cast<size_t>(b)]);
    for (auto [t, b] : d.verticals())
        tb.connect_vertical(shift_top[static_cast<size_t>(t)], shift_bot[static_cast<size_t>(b)]);

    const int m = static_cast<int>(top_occ.size());
    const int n = static_cast<int>(bot_occ.size());
    const int need_top = static_cast<int>(barcs.size()) - static_cast<int>(tarcs.size());
    for (int u = 0; u < need_top; ++u) tb.connect_top_arc(m + 2 * u, m + 2 * u + 1);
    for (int u = 0; u < -need_top; ++u) tb.connect_bottom_arc(n + 2 * u, n + 2 * u + 1);
    const int occupied = std::max(m + 2 * std::max(0, need_top), n + 2 * std::max(0, -need_top));
    for (int v = occupied; v < k; ++v) tb.connect_vertical(v, v);

    return RTLFactors{std::move(rb).build_unchecked(), std::move(tb).build_checked(),
                      std::move(lb).build_unchecked()};
}

MotzkinDiagram diagram_from_paths(const MotzkinPath& bottom_p, const MotzkinPath& top_q) {
    if (bottom_p.length() != top_q.length())
        throw std::invalid_argument("diagram_from_paths: length mismatch");
    if (bottom_p.rank() != top_q.rank())
        throw std::invalid_argument("diagram_from_paths: rank mismatch");
    const int k = bottom_p.length();
    OneFactor fp = path_to_factor(bottom_p);
    OneFactor fq = path_to_factor(top_q);
    DiagramBuilder b(k);
    for (auto [i, j] : fq.edges) b.connect_top_arc(i - 1, j - 1);
    for (auto [i, j] : fp.edges) b.connect_bottom_arc(i - 1, j - 1);
    for (size_t i = 0; i < fq.whites.size(); ++i)
        b.connect_vertical(fq.whites[i] - 1, fp.whites[i] - 1);
    return std::move(b).build_checked();
}

MotzkinPath top_path(const MotzkinDiagram& d) {
    OneFactor f;
    f.k = d.size();
    for (auto [t, b] : d.verticals()) f.whites.push_back(t + 1);
    for (auto [a, b] : d.top_arcs()) f.edges.emplace_back(a + 1, b + 1);
    std::sort(f.whites.begin(), f.whites.end());
    std::sort(f.edges.begin(), f.edges.end());
    return factor_to_path(f);
}

MotzkinPath bottom_path(const MotzkinDiagram& d) {
    OneFactor f;
    f.k = d.size();
    for (auto [t, b] : d.verticals()) f.whites.push_back(b + 1);
    for (auto [a, b] : d.bottom_arcs()) f.edges.emplace_back(a + 1, b + 1);
    std::sort(f.whites.begin(), f.whites.end());
    std::sort(f.edges.begin(), f.edges.end());
    return factor_to_path(f);
}

std::string MotzkinDiagram::ascii_art() const {
    const int k = k_;
    if (k == 0) return "(empty diagram)\n";
    const int w = 2 * k - 1;
    auto arc_lines = [&](const std::vector<std::pair<int, int>>& arcs, bool above) {
        // depth = longest chain of arcs nested inside, innermost depth 1
        std::vector<int> depth(arcs.size(), 0);
        auto longest = [&](auto&& self, size_t a) -> int {
            if (depth[a]) return depth[a];
            int best = 1;
            for (size_t j = 0; j < arcs.size(); ++j)
                if (a != j && arcs[a].first < arcs[j].first && arcs[j].second < arcs[a].second)
                    best = std::max(best, 1 + self(self, j));
            return depth[a] = best;
        };
        int maxd = 0;
        for (size_t i = 0; i < arcs.size(); ++i) maxd = std::max(maxd, longest(longest, i));
        std::vector<std::string> lines(static_cast<size_t>(maxd), std::string(static_cast<size_t>(w), ' '));
        for (size_t i = 0; i < arcs.size(); ++i) {
            // innermost arcs sit closest to the vertex row
            int row = above ? maxd - depth[i] : depth[i] - 1;
            auto& ln = lines[static_cast<size_t>(row)];
            int a = 2 * arcs[i].first, b = 2 * arcs[i].second;
            ln[static_cast<size_t>(a)] = '.';
            ln[static_cast<size_t>(b)] = '.';
            for (int c = a + 1; c < b; ++c) ln[static_cast<size_t>(c)] = '-';
        }
        return lines;
    };

    std::string vertex_row(static_cast<size_t>(w), ' ');
    for (int v = 0; v < k; ++v) vertex_row[static_cast<size_t>(2 * v)] = 'o';

    const auto verts = verticals();
    int span = 1;
    for (auto [t, b] : verts) span = std::max(span, std::abs(t - b));
    std::vector<std::string> mid(static_cast<size_t>(span), std::string(static_cast<size_t>(w), ' '));
    for (auto [t, b] : verts) {
        for (int row = 0; row < span; ++row) {
            double frac = (row + 0.5) / span;
            int col = static_cast<int>(std::lround(2 * t + (2 * b - 2 * t) * frac));
            char ch = t == b ? '|' : (b > t ? '\\' : '/');
            mid[static_cast<size_t>(row)][static_cast<size_t>(col)] = ch;
        }
    }

    std::string out;
    for (const auto& ln : arc_lines(top_arcs(), true)) out += ln + "\n";
    out += vertex_row + "\n";
    for (const auto& ln : mid) out += ln + "\n";
    out += vertex_row + "\n";
    for (const auto& ln : arc_lines(bottom_arcs(), false)) out += ln + "\n";
    return out;
}

}  // namespace motzkin
