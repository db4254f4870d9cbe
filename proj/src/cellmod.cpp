#include "motzkin/cellmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace motzkin {

PathAction act_on_path(const MotzkinDiagram& d, const MotzkinPath& p) {
    const int k = d.size();
    if (p.length() != k) throw std::invalid_argument("act_on_path: size mismatch");
    const OneFactor f = path_to_factor(p);

    // Union graph: nodes 0..k-1 are d's top row, k..2k-1 the shared middle
    // (d's bottom row sitting on the path's vertices).
    const int M = k;
    std::vector<int> via_d(static_cast<size_t>(2 * k), MotzkinDiagram::none);
    std::vector<int> via_p(static_cast<size_t>(2 * k), MotzkinDiagram::none);
    for (int v = 0; v < 2 * k; ++v) via_d[static_cast<size_t>(v)] = d.partner(v);
    for (auto [i, j] : f.edges) {
        via_p[static_cast<size_t>(M + i - 1)] = M + j - 1;
        via_p[static_cast<size_t>(M + j - 1)] = M + i - 1;
    }

    std::vector<char> visited(static_cast<size_t>(2 * k), 0);
    auto walk = [&](int start, bool use_d) {
        int cur = start;
        bool next_d = use_d;
        visited[static_cast<size_t>(cur)] = 1;
        while (true) {
            int nxt = next_d ? via_d[static_cast<size_t>(cur)] : via_p[static_cast<size_t>(cur)];
            if (nxt == MotzkinDiagram::none) return cur;
            cur = nxt;
            visited[static_cast<size_t>(cur)] = 1;
            if (cur < M) return cur;  // emerged at the top row
            next_d = !next_d;
        }
    };

    OneFactor q;
    q.k = k;
    int loops = 0;
    for (int t = 0; t < k; ++t) {
        if (visited[static_cast<size_t>(t)]) continue;
        if (via_d[static_cast<size_t>(t)] == MotzkinDiagram::none) continue;  // isolated: black
        int end = walk(t, true);
        if (end < M) {
            if (end != t) q.edges.emplace_back(std::min(t, end) + 1, std::max(t, end) + 1);
        } else if (f.is_white(end - M + 1)) {
            q.whites.push_back(t + 1);
        }
    }
    for (int v = 0; v < k; ++v) {  // open middle paths die; record visits
        int node = M + v;
        if (visited[static_cast<size_t>(node)]) continue;
        bool has_d = via_d[static_cast<size_t>(node)] != MotzkinDiagram::none;
        bool has_p = via_p[static_cast<size_t>(node)] != MotzkinDiagram::none;
        if (has_d != has_p) walk(node, has_d);
    }
    for (int v = 0; v < k; ++v) {  // what remains with both links is a loop
        int node = M + v;
        if (visited[static_cast<size_t>(node)]) continue;
        if (via_d[static_cast<size_t>(node)] == MotzkinDiagram::none) continue;
        int cur = node;
        bool next_d = true;
        do {
            visited[static_cast<size_t>(cur)] = 1;
            cur = next_d ? via_d[static_cast<size_t>(cur)] : via_p[static_cast<size_t>(cur)];
            next_d = !next_d;
        } while (cur != node || !next_d);
        ++loops;
    }
    std::sort(q.whites.begin(), q.whites.end());
    std::sort(q.edges.begin(), q.edges.end());
    return PathAction{loops, factor_to_path(q)};
}

BigInt character(int k, int r, int l) {
    if (r < 0 || r > k || l < 0 || l > k)
        throw std::invalid_argument("character: indices out of range");
    const MotzkinDiagram d = identity_partial(k, l);
    BigInt trace = 0;
    for (const auto& p : enumerate_paths(k, r)) {
        PathAction a = act_on_path(d, p);
        if (a.path == p) {
            if (a.loops != 0) throw std::logic_error("character: unexpected loop");
            trace += 1;
        }
    }
    return trace;
}

PolyX bilinear(const MotzkinPath& p, const MotzkinPath& q) {
    if (p.length() != q.length() || p.rank() != q.rank())
        throw std::invalid_argument("bilinear: rank mismatch");
    const int r = p.rank();
    DiagramProduct prod = multiply(diagram_from_paths(p, p), diagram_from_paths(q, q));
    if (prod.diagram.rank() < r) return PolyX();
    if (prod.diagram != diagram_from_paths(q, p))
        throw std::logic_error("bilinear: product is not the expected d_q^p");
    return PolyX::monomial(prod.loops, Rational(1));
}

GramMatrix gram_matrix(int k, int r) {
    GramMatrix g;
    g.k = k;
    g.r = r;
    if (r >= 0 && r <= k) g.paths = enumerate_paths(k, r);
    const int n = static_cast<int>(g.paths.size());
    g.entries = Matrix<PolyX>(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            PolyX v = bilinear(g.paths[static_cast<size_t>(i)], g.paths[static_cast<size_t>(j)]);
            g.entries(i, j) = v;
            g.entries(j, i) = v;
        }
    }
    return g;
}

int PivotedFactor::whites_left_of_pivot() const {
    int s = 0;
    for (int w : factor.whites)
        if (w < pivot.first) ++s;
    return s;
}

PivotedFactor pivoted(const MotzkinPath& p) {
    if (p.length() == 0 || p.step(p.length() - 1) != -1)
        throw std::invalid_argument("pivoted: path must end with -1");
    PivotedFactor pf;
    pf.factor = path_to_factor(p);
    for (auto e : pf.factor.edges)
        if (e.second == p.length()) pf.pivot = e;
    return pf;
}

namespace {

OneFactor erase_pivot_edge(const PivotedFactor& pf) {
    OneFactor f = pf.factor;
    f.edges.erase(std::find(f.edges.begin(), f.edges.end(), pf.pivot));
    return f;
}

}  // namespace

MotzkinPath remove_pivot(const PivotedFactor& pf) {
    return factor_to_path(erase_pivot_edge(pf));
}

MotzkinPath whiten_pivot(const PivotedFactor& pf) {
    OneFactor f = erase_pivot_edge(pf);
    f.whites.push_back(pf.pivot.first);
    f.whites.push_back(pf.pivot.second);
    std::sort(f.whites.begin(), f.whites.end());
    return factor_to_path(f);
}

std::optional<PivotedFactor> shift_pivot(const PivotedFactor& pf) {
    const int a = pf.pivot.first;
    int w = 0;
    for (int white : pf.factor.whites)
        if (white < a) w = std::max(w, white);
    if (w == 0) return std::nullopt;
    PivotedFactor out;
    out.factor = erase_pivot_edge(pf);
    out.factor.whites.erase(std::find(out.factor.whites.begin(), out.factor.whites.end(), w));
    out.factor.whites.push_back(pf.pivot.second);  // the old right endpoint turns white
    std::sort(out.factor.whites.begin(), out.factor.whites.end());
    out.factor.edges.emplace_back(w, a);
    std::sort(out.factor.edges.begin(), out.factor.edges.end());
    out.factor.validate();
    out.pivot = {w, a};
    return out;
}

PathVector<RatFnX> bracket_vector(const PivotedFactor& pf) {
    const MotzkinPath p = factor_to_path(pf.factor);
    PathVector<RatFnX> out(p.length(), p.rank());
    out.add_term(p, RatFnX(1));
    out.add_term(remove_pivot(pf), RatFnX(-1));
    if (auto next = shift_pivot(pf)) {
        const int s = pf.whites_left_of_pivot();
        PathVector<RatFnX> tail = bracket_vector(*next);
        tail *= chebyshev_shifted_ratio(s - 1, s);
        out -= tail;
    }
    return out;
}

PathVector<RatFnX> bracket_vector(const MotzkinPath& p) { return bracket_vector(pivoted(p)); }

bool pivot_in_inner_loop(const PivotedFactor& pf, const MotzkinPath& q) {
    const int k = pf.factor.k;
    if (q.length() != k) throw std::invalid_argument("pivot_in_inner_loop: size mismatch");
    const OneFactor fq = path_to_factor(q);
    // Middle row of d_p^p d_q^q: p's arcs against q's arcs.  The pivot arc is
    // in a loop iff every vertex of its component carries both an arc of p
    // and an arc of q.
    std::vector<int> link_p(static_cast<size_t>(k) + 1, 0), link_q(static_cast<size_t>(k) + 1, 0);
    for (auto [i, j] : pf.factor.edges) {
        link_p[static_cast<size_t>(i)] = j;
        link_p[static_cast<size_t>(j)] = i;
    }
    for (auto [i, j] : fq.edges) {
        link_q[static_cast<size_t>(i)] = j;
        link_q[static_cast<size_t>(j)] = i;
    }
    // Walk from the pivot's left endpoint along alternating q/p arcs; the
    // component is a cycle iff we return without hitting a vertex that lacks
    // the next link.
    int start = pf.pivot.first;
    int cur = start;
    bool use_q = true;
    while (true) {
        int nxt = use_q ? link_q[static_cast<size_t>(cur)] : link_p[static_cast<size_t>(cur)];
        if (nxt == 0) return false;
        cur = nxt;
        use_q = !use_q;
        if (cur == start && use_q) return true;  // closed the cycle through p's side
    }
}

namespace {

RatFnX form_on_vectors(const PathVector<RatFnX>& u, const PathVector<RatFnX>& v) {
    RatFnX out;
    for (const auto& [p, cp] : u.terms())
        for (const auto& [q, cq] : v.terms()) {
            PolyX f = bilinear(p, q);
            if (!f.is_zero()) out += cp * cq * RatFnX(f);
        }
    return out;
}

}  // namespace

bool gram_block_check(int k, int r) {
    if (k < 1 || r < 0 || r > k) throw std::invalid_argument("gram_block_check: bad indices");
    const auto paths = enumerate_paths(k, r);
    const int n = static_cast<int>(paths.size());

    std::vector<PathVector<RatFnX>> basis;
    basis.reserve(static_cast<size_t>(n));
    int n_plus = 0, n_zero = 0, n_minus = 0;
    for (const auto& p : paths) {
        int8_t last = p.step(k - 1);
        if (last == 1) ++n_plus;
        else if (last == 0) ++n_zero;
        else ++n_minus;
    }
    // the cell-basis order lists the +1 block, then 0, then -1
    for (int i = 0; i < n_plus + n_zero; ++i)
        basis.emplace_back(paths[static_cast<size_t>(i)], RatFnX(1));
    for (int i = n_plus + n_zero; i < n; ++i)
        basis.push_back(bracket_vector(paths[static_cast<size_t>(i)]));

    Matrix<RatFnX> b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            RatFnX v = form_on_vectors(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
            b(i, j) = v;
            b(j, i) = v;
        }

    const GramMatrix g1 = gram_matrix(k - 1, r - 1);
    const GramMatrix g2 = gram_matrix(k - 1, r);
    const GramMatrix g3 = gram_matrix(k - 1, r + 1);
    if (static_cast<int>(g1.paths.size()) != n_plus) return false;
    if (static_cast<int>(g2.paths.size()) != n_zero) return false;
    if (static_cast<int>(g3.paths.size()) != n_minus) return false;

    const RatFnX ratio = chebyshev_shifted_ratio(r + 1, r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatFnX expected;
            if (i < n_plus && j < n_plus) {
                expected = RatFnX(g1.entries(i, j));
            } else if (i >= n_plus && i < n_plus + n_zero && j >= n_plus && j < n_plus + n_zero) {
                expected = RatFnX(g2.entries(i - n_plus, j - n_plus));
            } else if (i >= n_plus + n_zero && j >= n_plus + n_zero) {
                expected = ratio * RatFnX(g3.entries(i - n_plus - n_zero, j - n_plus - n_zero));
            }
            if (b(i, j) != expected) return false;
        }
    return true;
}

PolyX gram_det_direct(int k, int r) {
    return det_bareiss(gram_matrix(k, r).entries);
}

PolyX gram_det_interpolated(int k, int r) {
    const GramMatrix g = gram_matrix(k, r);
    const int n = static_cast<int>(g.paths.size());
    int degree_bound = 0;
    for (int i = 0; i < n; ++i) {
        int row_max = 0;
        for (int j = 0; j < n; ++j) row_max = std::max(row_max, g.entries(i, j).degree());
        degree_bound += std::max(0, row_max);
    }
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= degree_bound; ++t) {
        Rational x(t);
        Matrix<Rational> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = g.entries(i, j).eval(x);
        xs.push_back(x);
        ys.push_back(det_rational(std::move(m)));
    }
    return interpolate(xs, ys);
}

PolyX gram_det_formula(int k, int r) {
    if (r < 0 || r > k) return PolyX(Rational(1));
    RatFnX product(1);
    for (int s = 1; s <= (k - r) / 2; ++s) {
        long e = m_count(k, r + 2 * s).get_si();
        RatFnX base = chebyshev_shifted_ratio(s + r, s - 1);
        product *= ring_pow(base, static_cast<int>(e));
    }
    return product.to_poly();  // throws if the product fails to reduce
}

SemisimplicityReport is_semisimple(int k, const Rational& x_val) {
    if (k < 1) throw std::invalid_argument("is_semisimple: needs k >= 1");
    SemisimplicityReport rep;
    for (int j = 1; j <= k - 1; ++j)
        if (chebyshev_u_shifted(j).eval(x_val).is_zero()) rep.failing_j.push_back(j);
    rep.semisimple = rep.failing_j.empty();
    return rep;
}

bool restriction_check(int k, int r) {
    std::vector<MotzkinDiagram> smalls;
    smalls.push_back(MotzkinDiagram::identity(k - 1));
    for (int i = 1; i < k - 1; ++i) {
        smalls.push_back(gen_t(k - 1, i));
        smalls.push_back(gen_l(k - 1, i));
        smalls.push_back(gen_r(k - 1, i));
    }
    for (int i = 1; i <= k - 1; ++i) smalls.push_back(gen_p(k - 1, i));
    return restriction_check(k, r, smalls);
}

bool restriction_check(int k, int r, const std::vector<MotzkinDiagram>& small_diagrams) {
    if (k < 2 || r < 0 || r > k) throw std::invalid_argument("restriction_check: bad indices");
    const auto paths = enumerate_paths(k, r);

    // Cardinalities and order of the three truncation images.
    std::vector<MotzkinPath> ends_plus, ends_zero, ends_minus;
    for (const auto& p : paths) {
        int8_t last = p.step(k - 1);
        if (last == 1) ends_plus.push_back(p.truncated());
        else if (last == 0) ends_zero.push_back(p.truncated());
        else ends_minus.push_back(p.truncated());
    }
    if (ends_plus != enumerate_paths(k - 1, r - 1)) return false;
    if (ends_zero != enumerate_paths(k - 1, r)) return false;
    if (ends_minus != enumerate_paths(k - 1, r + 1)) return false;
    if (static_cast<BigInt>(paths.size()) !=
        m_count(k - 1, r - 1) + m_count(k - 1, r) + m_count(k - 1, r + 1))
        return false;

    // Intertwining with the embedded action.
    for (const auto& dp : small_diagrams) {
        const MotzkinDiagram d = embed_with_strands(dp, k);
        for (const auto& p : paths) {
            const int8_t last = p.step(k - 1);
            const MotzkinPath pt = p.truncated();
            const PathAction big = act_on_path(d, p);
            const PathAction small = act_on_path(dp, pt);
            if (last == 0 || last == 1) {
                if (big.loops != small.loops) return false;
                if (big.path.truncated() != small.path) return false;
                if (big.path.step(k - 1) != last) return false;
            } else {
                const bool big_survives =
                    big.path.rank() == r && big.path.step(k - 1) == -1;
                const bool small_survives = small.path.rank() == r + 1;
                if (big_survives != small_survives) return false;
                if (big_survives) {
                    if (big.loops != small.loops) return false;
                    if (big.path.truncated() != small.path) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace motzkin
