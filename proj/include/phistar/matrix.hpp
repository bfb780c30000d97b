#pragma once

// Small dense matrices over exact scalars (Rat, GaussRat, Poly).
// Determinants use Bareiss fraction-free elimination so polynomial and
// rational entries stay exact; field types also get plain LU solves.

#include "phistar/poly.hpp"
#include "phistar/rational.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace phistar {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t r, size_t c, T fill = T{}) : rows_(r), cols_(c), a_(r * c, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

// Helpers so bareiss_det can subtract without another functor.
inline Rat sub(const Rat& a, const Rat& b) { return a - b; }
inline GaussRat sub(const GaussRat& a, const GaussRat& b) { return a - b; }
inline Poly sub(const Poly& a, const Poly& b) { return a - b; }

// Bareiss determinant over an integral domain.  `is_zero` and `divide_exact`
// must be provided for the scalar type.
template <class T, class IsZero, class Mul, class DivExact>
T bareiss_det(Matrix<T> m, const T& one, IsZero is_zero, Mul mul, DivExact div) {
    const size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return one;
    T prev = one;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) {
                // Column k is zero below the diagonal; determinant vanishes.
                bool all_zero = true;
                for (size_t j = k; j < n && all_zero; ++j)
                    if (!is_zero(m(k, j))) all_zero = false;
                (void)all_zero;
                return T{};
            }
            for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T t = mul(m(i, j), m(k, k));
                T u = mul(m(i, k), m(k, j));
                // t - u, expressed through the ring ops the caller gave us.
                m(i, j) = div(sub(t, u), prev);
            }
            m(i, k) = T{};
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    if (sign < 0) d = sub(T{}, d);
    return d;
}

inline Rat det(const Matrix<Rat>& m) {
    return bareiss_det<Rat>(
        m, Rat(1), [](const Rat& x) { return x == 0; },
        [](const Rat& a, const Rat& b) { return a * b; },
        [](const Rat& a, const Rat& b) { return a / b; });
}

inline GaussRat det(const Matrix<GaussRat>& m) {
    return bareiss_det<GaussRat>(
        m, GaussRat(Rat(1)), [](const GaussRat& x) { return x.is_zero(); },
        [](const GaussRat& a, const GaussRat& b) { return a * b; },
        [](const GaussRat& a, const GaussRat& b) { return a / b; });
}

inline Poly det(const Matrix<Poly>& m, size_t nvars) {
    return bareiss_det<Poly>(
        m, Poly::constant(nvars, Rat(1)), [](const Poly& p) { return p.is_zero(); },
        [](const Poly& a, const Poly& b) { return a * b; },
        [](const Poly& a, const Poly& b) { return a.divide_exact(b); });
}

// Gaussian elimination solve over a field (Rat or GaussRat).  Returns false
// if the matrix is singular.
template <class T, class IsZero>
bool field_solve(Matrix<T> a, std::vector<std::vector<T>>& rhs_cols, IsZero is_zero) {
    const size_t n = a.rows();
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && is_zero(a(p, k))) ++p;
        if (p == n) return false;
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            for (auto& col : rhs_cols) std::swap(col[k], col[p]);
        }
        T piv = a(k, k);
        for (size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(a(i, k))) continue;
            T f = a(i, k) / piv;
            for (size_t j = k; j < n; ++j) a(i, j) = sub(a(i, j), f * a(k, j));
            for (auto& col : rhs_cols) col[i] = sub(col[i], f * col[k]);
        }
    }
    for (size_t k = 0; k < n; ++k)
        for (auto& col : rhs_cols) col[k] = col[k] / a(k, k);
    return true;
}

}  // namespace phistar
