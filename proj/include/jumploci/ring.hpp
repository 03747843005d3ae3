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

#ifndef JUMPLOCI_RING_HPP
#define JUMPLOCI_RING_HPP

#include <string>
#include <vector>

#include "error.hpp"
#include "fox.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace jumploci {

/// Degree <= 2 cohomology of the presentation 2-complex:
///   C^0 = Q -> C^1 = Q^n --E--> C^2 = Q^m,
/// with H^1 = ker E, H^2 = Q^m / col(E), and the cup product of degree-one
/// classes evaluated on relator j as alpha^T C_j beta.
struct CupData {
    size_t n = 0;
    IntMatrix exponents;                         // E, m x n
    std::vector<Matrix<Rational>> second;        // C_j[k][l] = augmented d_l(d_k r_j)
    std::vector<std::vector<Rational>> h1_basis; // basis of ker E
    Matrix<Rational> h2_functionals;             // rows y with y^T E = 0; they detect classes in H^2

    size_t b1() const noexcept { return h1_basis.size(); }
    size_t b2() const noexcept { return h2_functionals.rows(); }
};

inline constexpr const char* kRingModel = "presentation 2-complex (group cohomology in degrees <= 2)";

/// Augmented second Fox derivatives of a single word.
inline Matrix<Rational> second_fox_augmented(const Word& w, size_t n) {
    Matrix<Rational> c(n, n, Rational(0));
    std::vector<long> prefix(n, 0);
    for (const auto& letter : w.letters()) {
        const size_t g = letter.gen;
        if (letter.exp > 0) {
            // term y_1 .. y_{p-1}
            for (size_t l = 0; l < n; ++l) c(g, l) += prefix[l];
            ++prefix[g];
        } else {
            // term -y_1 .. y_p, the prefix including the inverse letter
            --prefix[g];
            for (size_t l = 0; l < n; ++l) c(g, l) -= prefix[l];
        }
    }
    return c;
}

inline CupData cup_data(const Presentation& p) {
    validate(p);
    CupData d;
    d.n = p.num_generators();
    d.exponents = exponent_matrix(p);
    for (const auto& r : p.relators) d.second.push_back(second_fox_augmented(r, d.n));
    const Matrix<Rational> e = to_rational(d.exponents);
    d.h1_basis = nullspace_over_field(e);
    const auto left = nullspace_over_field(e.transposed());
    d.h2_functionals = Matrix<Rational>(left.size(), p.num_relators(), Rational(0));
    for (size_t r = 0; r < left.size(); ++r)
        for (size_t j = 0; j < left[r].size(); ++j) d.h2_functionals(r, j) = left[r][j];
    return d;
}

/// A degree-one class alpha with E alpha = 0.
class OneForm {
   public:
    OneForm(const CupData& cup, std::vector<Rational> alpha) : a_(std::move(alpha)) {
        if (a_.size() != cup.n)
            throw Error(ErrorKind::InvalidOneForm, "expected " + std::to_string(cup.n) + " coordinates");
        for (size_t j = 0; j < cup.exponents.rows(); ++j) {
            Rational s = 0;
            for (size_t i = 0; i < cup.n; ++i) s += Rational(cup.exponents(j, i)) * a_[i];
            if (sgn(s) != 0) throw Error(ErrorKind::InvalidOneForm, "E * alpha != 0 at relator " + std::to_string(j));
        }
    }
    const std::vector<Rational>& values() const noexcept { return a_; }
    bool is_zero() const {
        for (const auto& x : a_)
            if (sgn(x) != 0) return false;
        return true;
    }

   private:
    std::vector<Rational> a_;
};

/// dim H^1 of the Aomoto complex (H^*, alpha ^ .).
inline size_t aomoto_h1_dim(const CupData& cup, const OneForm& alpha) {
    if (alpha.is_zero()) return cup.b1();
    const auto& a = alpha.values();
    const size_t m = cup.second.size(), b = cup.b1();
    // (alpha ^ beta_c) evaluated on each relator
    Matrix<Rational> prod(m, b, Rational(0));
    for (size_t j = 0; j < m; ++j) {
        std::vector<Rational> row(cup.n, Rational(0));  // alpha^T C_j
        for (size_t k = 0; k < cup.n; ++k) {
            if (is_zero(a[k])) continue;
            for (size_t l = 0; l < cup.n; ++l) row[l] += a[k] * cup.second[j](k, l);
        }
        for (size_t c = 0; c < b; ++c) {
            Rational s = 0;
            for (size_t l = 0; l < cup.n; ++l) s += row[l] * cup.h1_basis[c][l];
            prod(j, c) = s;
        }
    }
    const size_t rank = cup.b2() == 0 ? 0 : rank_over_field(cup.h2_functionals * prod);
    return b - rank - 1;  // kernel of mu_alpha, modulo the line spanned by alpha
}

inline size_t aomoto_h1_dim(const Presentation& p, const std::vector<Rational>& alpha) {
    const CupData cup = cup_data(p);
    return aomoto_h1_dim(cup, OneForm(cup, alpha));
}

inline bool resonance_dim_ge(const CupData& cup, const OneForm& alpha, size_t k) {
    return aomoto_h1_dim(cup, alpha) >= k;
}

/// Alternating forms on H^1 (in the h1_basis coordinates), one per H^2
/// functional: (beta, gamma) -> y^T (beta^T (C_j - C_j^T) gamma)_j.
inline std::vector<Matrix<Rational>> antisymmetrized_cup_forms(const CupData& cup) {
    std::vector<Matrix<Rational>> out;
    const size_t b = cup.b1();
    for (size_t r = 0; r < cup.b2(); ++r) {
        Matrix<Rational> f(b, b, Rational(0));
        for (size_t j = 0; j < cup.second.size(); ++j) {
            const Rational& y = cup.h2_functionals(r, j);
            if (is_zero(y)) continue;
            const auto& c = cup.second[j];
            for (size_t u = 0; u < b; ++u)
                for (size_t v = 0; v < b; ++v) {
                    Rational s = 0;
                    for (size_t k = 0; k < cup.n; ++k)
                        for (size_t l = 0; l < cup.n; ++l)
                            s += cup.h1_basis[u][k] * (c(k, l) - c(l, k)) * cup.h1_basis[v][l];
                    f(u, v) += y * s;
                }
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace jumploci

#endif
