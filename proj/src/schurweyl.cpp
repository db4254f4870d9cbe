#include "motzkin/schurweyl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "motzkin/combinatorics.hpp"

namespace motzkin {

std::vector<Tuple> all_tuples(int k) {
    std::vector<Tuple> out;
    out.reserve(static_cast<size_t>(std::pow(3.0, k)));
    Tuple cur(static_cast<size_t>(k), int8_t{-1});
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == 1) {
            cur[static_cast<size_t>(pos)] = -1;
            --pos;
        }
        if (pos < 0) break;
        ++cur[static_cast<size_t>(pos)];
    }
    return out;
}

std::string tuple_str(const Tuple& t) {
    std::string out;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ".";
        out += "v_{" + std::to_string(static_cast<int>(t[i])) + "}";
    }
    return out;
}

LaurentS form_top(int a, int b) {
    if (a == -1 && b == 1) return LaurentS::s_power(-1);
    if (a == 0 && b == 0) return LaurentS(Rational(1));
    if (a == 1 && b == -1) return -LaurentS::s_power(1);
    return LaurentS();
}

LaurentS form_bot(int a, int b) {
    if (a == -1 && b == 1) return -LaurentS::s_power(-1);
    if (a == 0 && b == 0) return LaurentS(Rational(1));
    if (a == 1 && b == -1) return LaurentS::s_power(1);
    return LaurentS();
}

TensorOperator<LaurentS> diagram_operator(const MotzkinDiagram& d) {
    const int k = d.size();
    TensorOperator<LaurentS> op(k);
    const auto tarcs = d.top_arcs();
    const auto barcs = d.bottom_arcs();
    const auto verts = d.verticals();
    std::vector<int> bottom_isolated, top_isolated;
    for (int v = 0; v < k; ++v) {
        if (d.partner(v) == MotzkinDiagram::none) top_isolated.push_back(v);
        if (d.partner(k + v) == MotzkinDiagram::none) bottom_isolated.push_back(v);
    }
    // value pairs with nonzero top-arc weight
    static const std::array<std::pair<int, int>, 3> arc_values{
        {{-1, 1}, {0, 0}, {1, -1}}};

    for (const auto& in : all_tuples(k)) {
        LaurentS weight(Rational(1));
        bool dead = false;
        for (int v : bottom_isolated)
            if (in[static_cast<size_t>(v)] != 0) { dead = true; break; }
        if (dead) continue;
        for (auto [a, b] : barcs) {
            LaurentS w = form_bot(in[static_cast<size_t>(a)], in[static_cast<size_t>(b)]);
            if (w.is_zero()) { dead = true; break; }
            weight *= w;
        }
        if (dead) continue;

        Tuple base(static_cast<size_t>(k), int8_t{0});
        for (auto [t, b] : verts) base[static_cast<size_t>(t)] = in[static_cast<size_t>(b)];

        // top arcs each contribute a 3-term sum
        const size_t na = tarcs.size();
        std::vector<size_t> choice(na, 0);
        while (true) {
            Tuple out = base;
            LaurentS w = weight;
            for (size_t a = 0; a < na; ++a) {
                auto [l, r] = tarcs[a];
                auto [vl, vr] = arc_values[choice[a]];
                out[static_cast<size_t>(l)] = static_cast<int8_t>(vl);
                out[static_cast<size_t>(r)] = static_cast<int8_t>(vr);
                w *= form_top(vl, vr);
            }
            op.add_entry(in, out, w);
            size_t pos = 0;
            while (pos < na && choice[pos] == 2) choice[pos++] = 0;
            if (pos == na) break;
            ++choice[pos];
        }
    }
    return op;
}

TensorOperator<LaurentS> positioned_operator(LocalKind kind, int k, int i) {
    const int width = kind == LocalKind::P ? 1 : 2;
    if (i < 1 || i + width - 1 > k)
        throw std::invalid_argument("positioned_operator: index out of range");
    switch (kind) {
        case LocalKind::T: return diagram_operator(gen_t(k, i));
        case LocalKind::L: return diagram_operator(gen_l(k, i));
        case LocalKind::R: return diagram_operator(gen_r(k, i));
        case LocalKind::P: return diagram_operator(gen_p(k, i));
    }
    throw std::logic_error("positioned_operator: unreachable");
}

namespace {

// K acts diagonally on V with weights q^a on v_a.
int k_weight_exponent(const Tuple& t, int from, int to) {  // sum of entries in [from, to)
    int e = 0;
    for (int i = from; i < to; ++i) e += t[static_cast<size_t>(i)];
    return e;
}

}  // namespace

TensorOperator<LaurentS> qgroup_operator(QGen g, int k) {
    if (k < 1) throw std::invalid_argument("qgroup_operator: needs k >= 1");
    TensorOperator<LaurentS> op(k);
    for (const auto& t : all_tuples(k)) {
        switch (g) {
            case QGen::E:
                // sum_j id^j x E x K^(k-1-j): E v_{-1} = v_1
                for (int j = 0; j < k; ++j) {
                    if (t[static_cast<size_t>(j)] != -1) continue;
                    Tuple out = t;
                    out[static_cast<size_t>(j)] = 1;
                    op.add_entry(t, out, LaurentS::q_power(k_weight_exponent(t, j + 1, k)));
                }
                break;
            case QGen::F:
                // sum_j K^-1^(j) x F x id^(k-1-j): F v_1 = v_{-1}
                for (int j = 0; j < k; ++j) {
                    if (t[static_cast<size_t>(j)] != 1) continue;
                    Tuple out = t;
                    out[static_cast<size_t>(j)] = -1;
                    op.add_entry(t, out, LaurentS::q_power(-k_weight_exponent(t, 0, j)));
                }
                break;
            case QGen::K1:
            case QGen::K1inv: {
                // v_0 carries the half-determinant character q^(1/2) for each
                // torus factor, so every vector of V has K1 K2-weight q and
                // arc-creating operators stay weight-homogeneous.
                int e = 0;
                for (int8_t v : t) e += v == 1 ? 2 : (v == 0 ? 1 : 0);
                if (g == QGen::K1inv) e = -e;
                op.add_entry(t, t, LaurentS::s_power(e));
                break;
            }
            case QGen::K2:
            case QGen::K2inv: {
                int e = 0;
                for (int8_t v : t) e += v == -1 ? 2 : (v == 0 ? 1 : 0);
                if (g == QGen::K2inv) e = -e;
                op.add_entry(t, t, LaurentS::s_power(e));
                break;
            }
            case QGen::K:
            case QGen::Kinv: {
                int e = k_weight_exponent(t, 0, k);
                if (g == QGen::Kinv) e = -e;
                op.add_entry(t, t, LaurentS::q_power(e));
                break;
            }
        }
    }
    return op;
}

TensorOperator<Rational> evaluate(const TensorOperator<LaurentS>& op, const Rational& s_val) {
    TensorOperator<Rational> out(op.length());
    for (const auto& [in, col] : op.columns())
        for (const auto& [t, c] : col) out.add_entry(in, t, c.eval(s_val));
    return out;
}

TensorVector<Rational> evaluate(const TensorVector<LaurentS>& v, const Rational& s_val) {
    TensorVector<Rational> out(v.length());
    for (const auto& [t, c] : v.terms()) out.add_term(t, c.eval(s_val));
    return out;
}

namespace {

template <class R>
bool commutation_check_impl(const std::vector<TensorOperator<R>>& gens,
                            const std::vector<TensorOperator<R>>& qgens) {
    for (const auto& g : gens)
        for (const auto& u : qgens)
            if (!g.commutator(u).is_zero()) return false;
    return true;
}

}  // namespace

bool commutation_check(int k) {
    if (k < 2) throw std::invalid_argument("commutation_check: needs k >= 2");
    std::vector<TensorOperator<LaurentS>> gens;
    for (int i = 1; i < k; ++i) {
        gens.push_back(diagram_operator(gen_t(k, i)));
        gens.push_back(diagram_operator(gen_l(k, i)));
        gens.push_back(diagram_operator(gen_r(k, i)));
    }
    std::vector<TensorOperator<LaurentS>> qgens;
    for (QGen g : {QGen::E, QGen::F, QGen::K1, QGen::K2})
        qgens.push_back(qgroup_operator(g, k));
    return commutation_check_impl(gens, qgens);
}

bool commutation_check_evaluated(int k, const Rational& s_val) {
    if (k < 2) throw std::invalid_argument("commutation_check: needs k >= 2");
    std::vector<TensorOperator<Rational>> gens;
    for (int i = 1; i < k; ++i) {
        gens.push_back(evaluate(diagram_operator(gen_t(k, i)), s_val));
        gens.push_back(evaluate(diagram_operator(gen_l(k, i)), s_val));
        gens.push_back(evaluate(diagram_operator(gen_r(k, i)), s_val));
    }
    std::vector<TensorOperator<Rational>> qgens;
    for (QGen g : {QGen::E, QGen::F, QGen::K1, QGen::K2})
        qgens.push_back(evaluate(qgroup_operator(g, k), s_val));
    return commutation_check_impl(gens, qgens);
}

bool representation_check(const std::vector<std::pair<MotzkinDiagram, MotzkinDiagram>>& pairs) {
    const LaurentS zeta = zeta_q();
    for (const auto& [d1, d2] : pairs) {
        DiagramProduct p = multiply(d1, d2);
        TensorOperator<LaurentS> lhs = diagram_operator(d1).compose(diagram_operator(d2));
        TensorOperator<LaurentS> rhs = diagram_operator(p.diagram);
        rhs *= zeta.pow(p.loops);
        if (lhs != rhs) return false;
    }
    return true;
}

bool representation_check_evaluated(
    const std::vector<std::pair<MotzkinDiagram, MotzkinDiagram>>& pairs, const Rational& s_val) {
    const Rational zeta = zeta_q().eval(s_val);
    for (const auto& [d1, d2] : pairs) {
        DiagramProduct p = multiply(d1, d2);
        TensorOperator<Rational> lhs =
            evaluate(diagram_operator(d1), s_val).compose(evaluate(diagram_operator(d2), s_val));
        TensorOperator<Rational> rhs = evaluate(diagram_operator(p.diagram), s_val);
        rhs *= zeta.pow(p.loops);
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

// Rank of a sparse rational matrix given as rows of (column -> value).
int rank_sparse(std::vector<std::map<int, Rational>> rows) {
    std::map<int, std::map<int, Rational>> pivots;  // leading column -> reduced row
    int rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            int lead = row.begin()->first;
            auto pit = pivots.find(lead);
            if (pit == pivots.end()) break;
            Rational f = row.begin()->second;
            for (const auto& [c, v] : pit->second) {
                auto it = row.find(c);
                if (it == row.end()) {
                    row.emplace(c, -f * v);
                } else {
                    it->second -= f * v;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        }
        if (row.empty()) continue;
        Rational inv = Rational(1) / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(row.begin()->first, std::move(row));
        ++rank;
    }
    return rank;
}

}  // namespace

int faithfulness_rank(int k, const Rational& s_val) {
    const auto tuples = all_tuples(k);
    std::map<Tuple, int> tuple_index;
    for (size_t i = 0; i < tuples.size(); ++i) tuple_index.emplace(tuples[i], static_cast<int>(i));
    const int dim = static_cast<int>(tuples.size());

    std::vector<std::map<int, Rational>> rows;
    for (const auto& d : enumerate_diagrams(k)) {
        TensorOperator<Rational> op = evaluate(diagram_operator(d), s_val);
        std::map<int, Rational> row;
        for (const auto& [in, col] : op.columns()) {
            int ci = tuple_index.at(in);
            for (const auto& [out, c] : col) row.emplace(ci * dim + tuple_index.at(out), c);
        }
        rows.push_back(std::move(row));
    }
    return rank_sparse(std::move(rows));
}

TensorVector<LaurentS> simple_tensor(const MotzkinPath& p) {
    const OneFactor f = path_to_factor(p);
    Tuple t(static_cast<size_t>(p.length()), int8_t{0});
    for (auto [i, j] : f.edges) {
        t[static_cast<size_t>(i - 1)] = -1;
        t[static_cast<size_t>(j - 1)] = 1;
    }
    for (int w : f.whites) t[static_cast<size_t>(w - 1)] = 1;
    TensorVector<LaurentS> out(p.length());
    out.add_term(t, LaurentS(Rational(1)));
    return out;
}

TensorVector<LaurentS> highest_weight_vector(const MotzkinPath& p) {
    return diagram_operator(diagram_from_paths(p, p)).apply(simple_tensor(p));
}

bool highest_weight_claims(const MotzkinPath& p) {
    const int k = p.length();
    const TensorVector<LaurentS> u = simple_tensor(p);
    const TensorVector<LaurentS> w = highest_weight_vector(p);
    if (w.is_zero()) return false;
    const int edges = static_cast<int>(path_to_factor(p).edges.size());
    LaurentS expected_lead = LaurentS::s_power(-2 * edges);
    if (edges % 2) expected_lead = -expected_lead;
    if (w.coeff(u.terms().begin()->first) != expected_lead) return false;
    if (!qgroup_operator(QGen::E, k).apply(w).is_zero()) return false;
    TensorVector<LaurentS> expected = w;
    expected *= LaurentS::q_power(p.rank());
    return qgroup_operator(QGen::K, k).apply(w) == expected;
}

bool f_string_check(const MotzkinPath& p) {
    const int k = p.length();
    const auto f_op = qgroup_operator(QGen::F, k);
    TensorVector<LaurentS> v = highest_weight_vector(p);
    for (int step = 0; step < p.rank(); ++step) {
        v = f_op.apply(v);
        if (v.is_zero()) return false;
    }
    return f_op.apply(v).is_zero();
}

int highest_weight_independence_rank(int k, const Rational& s_val) {
    const auto tuples = all_tuples(k);
    std::map<Tuple, int> tuple_index;
    for (size_t i = 0; i < tuples.size(); ++i) tuple_index.emplace(tuples[i], static_cast<int>(i));
    std::vector<std::map<int, Rational>> rows;
    for (const auto& p : enumerate_paths(k)) {
        TensorVector<Rational> w = evaluate(highest_weight_vector(p), s_val);
        std::map<int, Rational> row;
        for (const auto& [t, c] : w.terms()) row.emplace(tuple_index.at(t), c);
        rows.push_back(std::move(row));
    }
    return rank_sparse(std::move(rows));
}

DecompositionReport decomposition_audit(int k) {
    DecompositionReport rep;
    rep.k = k;
    rep.multiplicities.assign(static_cast<size_t>(k) + 1, 0);
    rep.pass = true;
    const auto e_op = qgroup_operator(QGen::E, k);
    const auto k_op = qgroup_operator(QGen::K, k);
    for (const auto& p : enumerate_paths(k)) {
        TensorVector<LaurentS> w = highest_weight_vector(p);
        const int r = p.rank();
        if (w.is_zero()) rep.pass = false;
        if (!e_op.apply(w).is_zero()) rep.pass = false;
        TensorVector<LaurentS> kw = k_op.apply(w);
        TensorVector<LaurentS> expected = w;
        expected *= LaurentS::q_power(r);
        if (kw != expected) rep.pass = false;
        rep.multiplicities[static_cast<size_t>(r)] += 1;
    }
    for (int r = 0; r <= k; ++r) {
        if (rep.multiplicities[static_cast<size_t>(r)] != m_count(k, r)) rep.pass = false;
        rep.weighted_dimension += BigInt(r + 1) * rep.multiplicities[static_cast<size_t>(r)];
    }
    if (rep.weighted_dimension != int_pow(3, k)) rep.pass = false;
    return rep;
}

}  // namespace motzkin
