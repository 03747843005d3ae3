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

#ifndef JUMPLOCI_ROOTS_HPP
#define JUMPLOCI_ROOTS_HPP

#include <numeric>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "unipoly.hpp"

namespace jumploci {

struct CyclotomicFactors {
    std::vector<std::pair<unsigned long, unsigned>> factors;  // (n, multiplicity), n ascending
    QPoly remainder;                                          // no root of unity among its roots
};

/// Largest n that can satisfy phi(n) <= deg. phi(n) >= sqrt(n/2) gives n <= 2 deg^2.
inline unsigned long cyclotomic_search_bound(unsigned long deg) { return 2 * deg * deg + 1; }

/// Splits f = remainder * prod Phi_n^m by repeated exact division.
inline CyclotomicFactors cyclotomic_part(const QPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cyclotomic_part of 0");
    CyclotomicFactors out;
    out.remainder = f;
    const unsigned long bound = cyclotomic_search_bound(static_cast<unsigned long>(f.degree()));
    for (unsigned long n = 1; n <= bound; ++n) {
        if (out.remainder.degree() < 1) break;
        if (euler_phi(n) > static_cast<unsigned long>(out.remainder.degree())) continue;
        const QPoly& phi = cyclotomic_polynomial(n);
        unsigned mult = 0;
        while (out.remainder.degree() >= phi.degree()) {
            auto [q, r] = divmod(out.remainder, phi);
            if (!r.is_zero()) break;
            out.remainder = std::move(q);
            ++mult;
        }
        if (mult) out.factors.emplace_back(n, mult);
    }
    return out;
}

/// Level of the smallest cyclotomic field holding every coefficient.
inline unsigned long coefficient_level(const UniPoly<CycloNum>& f) {
    unsigned long n = 1;
    for (const auto& c : f.coeffs()) n = std::lcm(n, c.level());
    return n;
}

/// Product of the Galois conjugates of f over Q(zeta_N); equals the
/// resultant in x of Phi_N(x) and f written with coefficients in Q[x].
inline QPoly norm_to_rationals(const UniPoly<CycloNum>& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "norm of 0");
    const unsigned long n = coefficient_level(f);
    std::vector<CycloNum> base;
    for (const auto& c : f.coeffs()) base.push_back(c.embed(n));
    UniPoly<CycloNum> prod = UniPoly<CycloNum>::constant(CycloNum(1));
    for (unsigned long k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        std::vector<CycloNum> conj;
        conj.reserve(base.size());
        for (const auto& c : base) conj.push_back(c.galois(k));
        prod = prod * UniPoly<CycloNum>(std::move(conj));
    }
    std::vector<Rational> q;
    for (const auto& c : prod.coeffs()) {
        if (!c.is_rational()) throw Error(ErrorKind::DimensionMismatch, "norm did not descend to Q");
        q.push_back(c.rational_part());
    }
    return QPoly(std::move(q));
}

inline UniPoly<CycloNum> to_cyclo(const QPoly& p) {
    std::vector<CycloNum> c;
    for (const auto& a : p.coeffs()) c.emplace_back(a);
    return UniPoly<CycloNum>(std::move(c));
}

}  // namespace jumploci

#endif
