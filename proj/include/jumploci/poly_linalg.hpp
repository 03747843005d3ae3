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

#ifndef JUMPLOCI_POLY_LINALG_HPP
#define JUMPLOCI_POLY_LINALG_HPP

#include <numeric>
#include <tuple>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "unipoly.hpp"

namespace jumploci {

inline constexpr size_t kMaxMinorDim = 12;

/// Multiplies every row by the monomial that clears its negative exponents.
/// Row scaling by a unit changes neither the rank nor the zero locus on the torus.
template <class K>
Matrix<LaurentPoly<K>> clear_negative_exponents(Matrix<LaurentPoly<K>> m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        bool any = false;
        Exponent lo;
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            Exponent e = m(i, j).min_exponents();
            if (!any) lo = e;
            else
                for (size_t v = 0; v < lo.size(); ++v) lo[v] = std::min(lo[v], e[v]);
            any = true;
        }
        if (!any) continue;
        for (auto& v : lo) v = -v;
        for (size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).shifted(lo);
    }
    return m;
}

/// Rank over the field of rational functions in the polynomial variables,
/// by fraction-free (Bareiss) elimination with full pivoting. The pivot is
/// the nonzero entry of least total degree, ties broken by earliest (row, col).
template <class K>
size_t generic_rank(const Matrix<LaurentPoly<K>>& input) {
    Matrix<LaurentPoly<K>> m = clear_negative_exponents(input);
    const size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    LaurentPoly<K> prev = LaurentPoly<K>::constant(m(0, 0).vars(), K(1));
    size_t k = 0;
    for (; k < rows && k < cols; ++k) {
        bool found = false;
        size_t pi = 0, pj = 0;
        long best = 0;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j) {
                if (m(i, j).is_zero()) continue;
                const long deg = m(i, j).total_degree();
                if (!found || deg < best) {
                    found = true;
                    best = deg;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        m.swap_rows(k, pi);
        m.swap_cols(k, pj);
        for (size_t i = k + 1; i < rows; ++i) {
            for (size_t j = k + 1; j < cols; ++j) {
                LaurentPoly<K> num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_divide(num, prev);
            }
            m(i, k) = LaurentPoly<K>(m(i, k).vars());
        }
        prev = m(k, k);
    }
    return k;
}

/// Determinant of a square matrix of univariate polynomials (Bareiss).
template <class K>
UniPoly<K> determinant(Matrix<UniPoly<K>> m) {
    const size_t n = m.rows();
    if (n != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    if (n == 0) return UniPoly<K>::constant(K(1));
    UniPoly<K> prev = UniPoly<K>::constant(K(1));
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return {};
        if (p != k) {
            m.swap_rows(p, k);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = UniPoly<K>();
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

namespace detail {

// Advances an increasing index tuple over {0..n-1}; false when exhausted.
inline bool next_combination(std::vector<size_t>& c, size_t n) {
    const size_t r = c.size();
    for (size_t i = r; i-- > 0;) {
        if (c[i] < n - r + i) {
            ++c[i];
            for (size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Monic gcd of all r x r minors. Its roots are the parameter values where
/// the rank falls below r.
template <class K>
UniPoly<K> minor_gcd_1d(const Matrix<UniPoly<K>>& m, size_t r) {
    if (r > std::min(m.rows(), m.cols())) throw Error(ErrorKind::RankTooLarge, "minor size exceeds matrix shape");
    if (m.rows() > kMaxMinorDim || m.cols() > kMaxMinorDim)
        throw Error(ErrorKind::SizeLimit, "minor enumeration limited to " + std::to_string(kMaxMinorDim) +
                                              " rows and columns");
    if (r == 0) return UniPoly<K>::constant(K(1));
    UniPoly<K> g;
    std::vector<size_t> rs(r);
    std::iota(rs.begin(), rs.end(), 0);
    do {
        std::vector<size_t> cs(r);
        std::iota(cs.begin(), cs.end(), 0);
        do {
            Matrix<UniPoly<K>> sub(r, r, UniPoly<K>());
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) sub(i, j) = m(rs[i], cs[j]);
            UniPoly<K> d = determinant(std::move(sub));
            if (d.is_zero()) continue;
            g = gcd(g, d);
            if (g.degree() == 0) return g;
        } while (detail::next_combination(cs, m.cols()));
    } while (detail::next_combination(rs, m.rows()));
    if (g.is_zero()) throw Error(ErrorKind::RankTooLarge, "every " + std::to_string(r) + "x" + std::to_string(r) + " minor vanishes");
    return g;
}

}  // namespace jumploci

#endif
