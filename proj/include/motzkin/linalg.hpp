#ifndef MOTZKIN_LINALG_HPP
#define MOTZKIN_LINALG_HPP

#include "motzkin/matrix.hpp"
#include "motzkin/poly.hpp"
#include "motzkin/rational.hpp"

namespace motzkin {

/// Determinant by fraction-free Bareiss elimination over an integral domain;
/// T needs ring operations, is_zero() and exact_div().  Intermediate entries
/// stay genuine minors, so every division is exact.
template <class T>
T det_bareiss(Matrix<T> m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det_bareiss: matrix not square");
    if (n == 0) return T(Rational(1));
    T prev(Rational(1));
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (m(t, t).is_zero()) {
            int pivot_row = -1;
            for (int i = t + 1; i < n; ++i)
                if (!m(i, t).is_zero()) { pivot_row = i; break; }
            if (pivot_row < 0) return T();
            m.swap_rows(t, pivot_row);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i) {
            for (int j = t + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(t, t) - m(i, t) * m(t, j)).exact_div(prev);
            m(i, t) = T();
        }
        prev = m(t, t);
    }
    T out = m(n - 1, n - 1);
    if (sign < 0) out = -out;
    return out;
}

/// Determinant over the rationals by Gaussian elimination.
Rational det_rational(Matrix<Rational> m);

/// Rank over the rationals.
int rank_rational(Matrix<Rational> m);

/// Recovers the unique polynomial of degree <= points.size()-1 through the
/// given (x, y) samples (Lagrange via Newton divided differences).
PolyX interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace motzkin

#endif
