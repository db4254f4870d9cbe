#include "motzkin/linalg.hpp"

#include <stdexcept>

namespace motzkin {

Rational det_rational(Matrix<Rational> m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det_rational: matrix not square");
    Rational det(1);
    for (int t = 0; t < n; ++t) {
        int pivot = -1;
        for (int i = t; i < n; ++i)
            if (!m(i, t).is_zero()) { pivot = i; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != t) {
            m.swap_rows(t, pivot);
            det = -det;
        }
        det *= m(t, t);
        Rational inv = Rational(1) / m(t, t);
        for (int i = t + 1; i < n; ++i) {
            if (m(i, t).is_zero()) continue;
            Rational f = m(i, t) * inv;
            for (int j = t; j < n; ++j) m(i, j) -= f * m(t, j);
        }
    }
    return det;
}

int rank_rational(Matrix<Rational> m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (!m(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank) m.swap_rows(rank, pivot);
        Rational inv = Rational(1) / m(rank, col);
        for (int i = rank + 1; i < rows; ++i) {
            if (m(i, col).is_zero()) continue;
            Rational f = m(i, col) * inv;
            for (int j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

PolyX interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    const size_t n = xs.size();
    // Newton divided differences.
    std::vector<Rational> coef(ys);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    PolyX out;
    for (size_t i = n; i-- > 0;) {
        PolyX factor = PolyX::x() - PolyX(xs[i]);
        out = out * factor + PolyX(coef[i]);
    }
    return out;
}

}  // namespace motzkin
