/*
   Copyright 2026 The jumploci Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JUMPLOCI_MATRIX_HPP
#define JUMPLOCI_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace jumploci {

/// Dense row-major matrix. Entries are any value type with value semantics;
/// the field algorithms below additionally need +, -, *, is_zero and inverse.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transposed() const {
        Matrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.data_.reserve(data_.size());
        for (size_t j = 0; j < cols_; ++j)
            for (size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> out(rows_, cols_, U{});
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix<K> c(a.rows(), b.cols(), K(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (size_t j = 0; j < b.cols(); ++j) c(i, j) += K(a(i, k) * b(k, j));
        }
    return c;
}

/// Reduced row echelon form in place; returns pivot columns in order.
template <class K>
std::vector<size_t> rref_in_place(Matrix<K>& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const K inv = inverse(m(r, c));
        for (size_t j = c; j < m.cols(); ++j) m(r, j) = K(m(r, j) * inv);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const K f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= K(f * m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Exact rank by forward Gaussian elimination.
template <class K>
size_t rank_over_field(Matrix<K> m) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const K inv = inverse(m(r, c));
        for (size_t i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            const K f = K(m(i, c) * inv);
            for (size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= K(f * m(r, j));
        }
        ++r;
    }
    return r;
}

/// Basis of the right kernel; one vector per non-pivot column.
template <class K>
std::vector<std::vector<K>> nullspace_over_field(Matrix<K> m) {
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(m.cols(), K(0));
        v[f] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K(-m(r, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution x of a x = b, or nullopt when the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve_linear(const Matrix<K>& a, const std::vector<K>& b) {
    if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
    Matrix<K> aug(a.rows(), a.cols() + 1, K(0));
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<K> x(a.cols(), K(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

template <class K>
std::vector<K> apply(const Matrix<K>& a, const std::vector<K>& v) {
    if (v.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
    std::vector<K> out(a.rows(), K(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out[i] += K(a(i, j) * v[j]);
    return out;
}

// ---------------------------------------------------------------------------
// Integer matrices.

using IntMatrix = Matrix<long>;

inline Matrix<Rational> to_rational(const IntMatrix& m) {
    return m.map([](long v) { return Rational(v); });
}

inline size_t integer_rank(const IntMatrix& m) { return rank_over_field(to_rational(m)); }

/// Smith form data for an integer matrix A (n x d): L * A * R = diag(s)
/// with L, R unimodular. Only L and the invariant factors are kept.
struct SmithData {
    Matrix<Integer> left;          // n x n, unimodular
    std::vector<Integer> factors;  // nonzero invariant factors s_1 .. s_rank
};

inline SmithData smith_form(const IntMatrix& a) {
    const size_t n = a.rows(), d = a.cols();
    Matrix<Integer> m(n, d, Integer(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < d; ++j) m(i, j) = a(i, j);
    Matrix<Integer> left(n, n, Integer(0));
    for (size_t i = 0; i < n; ++i) left(i, i) = 1;

    auto row_op = [&](size_t dst, size_t src, const Integer& f) {  // row_dst -= f * row_src
        for (size_t j = 0; j < d; ++j) m(dst, j) -= f * m(src, j);
        for (size_t j = 0; j < n; ++j) left(dst, j) -= f * left(src, j);
    };
    auto col_op = [&](size_t dst, size_t src, const Integer& f) {
        for (size_t i = 0; i < n; ++i) m(i, dst) -= f * m(i, src);
    };

    SmithData out;
    size_t t = 0;
    while (t < n && t < d) {
        // smallest nonzero entry in the trailing block becomes the pivot
        bool found = false;
        size_t pi = 0, pj = 0;
        for (size_t i = t; i < n; ++i)
            for (size_t j = t; j < d; ++j)
                if (m(i, j) != 0 && (!found || abs(m(i, j)) < abs(m(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        m.swap_rows(t, pi);
        left.swap_rows(t, pi);
        m.swap_cols(t, pj);
        bool clean = true;
        for (size_t i = t + 1; i < n; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
            if (q != 0) row_op(i, t, q);
            if (m(i, t) != 0) clean = false;
        }
        for (size_t j = t + 1; j < d; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
            if (q != 0) col_op(j, t, q);
            if (m(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility of the remaining block is not needed for the
        // solvability test, so the diagonal is left as-is
        out.factors.push_back(abs(m(t, t)));
        ++t;
    }
    out.left = std::move(left);
    return out;
}

}  // namespace jumploci

#endif
