#include "motzkin/algebra.hpp"

namespace motzkin {

AlgebraElement<Rational> jones_idempotent(int k, const Rational& x_val) {
    if (k < 2) throw std::invalid_argument("jones_idempotent: needs k >= 2");
    if (x_val.is_zero()) throw std::invalid_argument("jones_idempotent: x must be nonzero");
    return AlgebraElement<Rational>(gen_t(k, k - 1), Rational(1) / x_val);
}

MotzkinDiagram embed_with_strands(const MotzkinDiagram& d, int k) {
    const int j = d.size();
    if (k < j) throw std::invalid_argument("embed_with_strands: target smaller than source");
    DiagramBuilder b(k);
    for (int v = 0; v < 2 * j; ++v) {
        int u = d.partner(v);
        if (u == MotzkinDiagram::none || u < v) continue;
        int sv = v < j ? v : k + (v - j);
        int su = u < j ? u : k + (u - j);
        b.connect(sv, su);
    }
    for (int v = j; v < k; ++v) b.connect_vertical(v, v);
    return std::move(b).build_unchecked();
}

AlgebraElement<Rational> basic_construction_embed(const MotzkinDiagram& d, int k,
                                                  const Rational& x_val) {
    if (k < 2 || d.size() != k - 2)
        throw std::invalid_argument("basic_construction_embed: diagram must live in M_{k-2}");
    AlgebraElement<Rational> e = jones_idempotent(k, x_val);
    AlgebraElement<Rational> mid(embed_with_strands(d, k));
    return elem_mul(elem_mul(e, mid, x_val), e, x_val);
}

int quotient_dimension(int k) {
    int count = 0;
    for (const auto& d : enumerate_diagrams(k))
        if (d.rank() > k - 2) ++count;
    return count;
}

bool matrix_unit_check(int k) {
    if (k < 1) throw std::invalid_argument("matrix_unit_check: needs k >= 1");
    const auto paths = enumerate_paths(k, k - 1);
    // d_q^p has top row p and bottom row q
    auto unit = [&](const MotzkinPath& q, const MotzkinPath& p) {
        return diagram_from_paths(q, p);
    };
    for (const auto& p : paths)
        for (const auto& q : paths)
            for (const auto& s : paths)
                for (const auto& t : paths) {
                    DiagramProduct prod = multiply(unit(q, p), unit(t, s));
                    if (q == s) {
                        if (prod.loops != 0) return false;
                        if (prod.diagram != unit(t, p)) return false;
                    } else {
                        if (prod.diagram.rank() > k - 2) return false;
                    }
                }
    if (quotient_dimension(k) != k * k + 1) return false;
    return true;
}

}  // namespace motzkin
