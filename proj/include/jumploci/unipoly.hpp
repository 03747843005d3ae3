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

#ifndef JUMPLOCI_UNIPOLY_HPP
#define JUMPLOCI_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace jumploci {

namespace detail {
template <class K>
bool coeff_is_zero(const K& a) {
    return is_zero(a);
}
template <class K>
K coeff_inverse(const K& a) {
    return inverse(a);
}
}  // namespace detail

/// Dense univariate polynomial over a field K, coefficients in ascending
/// degree. The zero polynomial has an empty coefficient vector.
template <class K>
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const K& a) { return UniPoly(std::vector<K>{a}); }
    static UniPoly monomial(const K& a, size_t deg) {
        std::vector<K> c(deg + 1, K(0));
        c[deg] = a;
        return UniPoly(std::move(c));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<K>& coeffs() const noexcept { return c_; }
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const K& lead() const {
        if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of 0");
        return c_.back();
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& a : r.c_) a = K(-a);
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const K& s) {
        for (auto& a : c_) a *= s;
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const K& s) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += K(a.c_[i] * b.c_[j]);
        }
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    K evaluate(const K& x) const {
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = K(acc * x + c_[i]);
        return acc;
    }

    /// Substitutes x -> x^k.
    UniPoly inflate(size_t k) const {
        if (is_zero()) return {};
        std::vector<K> r((c_.size() - 1) * k + 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return *this * detail::coeff_inverse(lead());
    }

    /// Number of leading zero coefficients (the power of x dividing this).
    size_t valuation() const {
        size_t v = 0;
        while (v < c_.size() && detail::coeff_is_zero(c_[v])) ++v;
        return v;
    }
    UniPoly shift_down(size_t k) const {
        if (k >= c_.size()) return {};
        return UniPoly(std::vector<K>(c_.begin() + static_cast<long>(k), c_.end()));
    }

   private:
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
};

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by 0");
    std::vector<K> r = a.coeffs();
    const auto& bc = b.coeffs();
    const size_t db = bc.size() - 1;
    if (r.size() < bc.size()) return {UniPoly<K>(), a};
    const K inv_lead = inverse(bc.back());
    std::vector<K> q(r.size() - db, K(0));
    for (size_t i = r.size(); i-- > db;) {
        if (is_zero(r[i])) continue;
        K f(r[i] * inv_lead);
        q[i - db] = f;
        for (size_t j = 0; j <= db; ++j)
            if (!is_zero(bc[j])) r[i - db + j] -= K(f * bc[j]);
    }
    r.resize(db);
    return {UniPoly<K>(std::move(q)), UniPoly<K>(std::move(r))};
}

template <class K>
UniPoly<K> operator%(const UniPoly<K>& a, const UniPoly<K>& b) {
    return divmod(a, b).second;
}

/// Quotient a / b; throws DivisionByZero when b does not divide a.
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::DivisionByZero, "inexact polynomial division");
    return q;
}

template <class K>
bool divides(const UniPoly<K>& b, const UniPoly<K>& a) {
    return divmod(a, b).second.is_zero();
}

/// Monic gcd by Euclid's algorithm; gcd(0, 0) = 0.
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        UniPoly<K> r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Returns (g, s) with s*a = g (mod m), g = gcd(a, m) monic.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> half_xgcd(const UniPoly<K>& a, const UniPoly<K>& m) {
    UniPoly<K> r0 = m, r1 = a;
    UniPoly<K> s0, s1 = UniPoly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly<K> s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {r0, s0};
    K li = inverse(r0.lead());
    return {r0 * li, s0 * li};
}

// Ascending degree, matching the Laurent text form.
template <class K>
std::string poly_to_string(const UniPoly<K>& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        const K& a = p.coeffs()[i];
        if (is_zero(a)) continue;
        std::string cs = to_string(a);
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += cs;
            continue;
        }
        if (cs != "1") s += cs + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace jumploci

#endif
