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

#ifndef JUMPLOCI_LAURENT_HPP
#define JUMPLOCI_LAURENT_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace jumploci {

using Exponent = std::vector<long>;
using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

/// Variables t1..td, the default parameter names along a torus.
inline VarList param_vars(size_t d) {
    std::vector<std::string> v;
    for (size_t i = 1; i <= d; ++i) v.push_back(d == 1 ? "t" : "t" + std::to_string(i));
    return make_vars(std::move(v));
}

/// Sparse multivariate Laurent polynomial: exponent vector -> nonzero
/// coefficient, ordered lexicographically by exponent.
template <class K>
class LaurentPoly {
   public:
    using Terms = std::map<Exponent, K>;

    LaurentPoly() : vars_(make_vars({})) {}
    explicit LaurentPoly(VarList vars) : vars_(std::move(vars)) {}
    LaurentPoly(VarList vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.size() != nvars()) throw Error(ErrorKind::DimensionMismatch, "exponent length");
            it = jumploci::is_zero(it->second) ? terms_.erase(it) : std::next(it);
        }
    }

    static LaurentPoly constant(VarList vars, const K& c) {
        LaurentPoly p(std::move(vars));
        if (!jumploci::is_zero(c)) p.terms_.emplace(Exponent(p.nvars(), 0), c);
        return p;
    }
    static LaurentPoly monomial(VarList vars, Exponent e, const K& c = K(1)) {
        LaurentPoly p(std::move(vars));
        if (e.size() != p.nvars()) throw Error(ErrorKind::DimensionMismatch, "exponent length");
        if (!jumploci::is_zero(c)) p.terms_.emplace(std::move(e), c);
        return p;
    }
    static LaurentPoly variable(VarList vars, size_t i, long power = 1) {
        Exponent e(vars->size(), 0);
        e.at(i) = power;
        return monomial(std::move(vars), std::move(e));
    }

    size_t nvars() const noexcept { return vars_->size(); }
    const VarList& vars() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    size_t size() const noexcept { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                                    terms_.begin()->first.end(),
                                                                    [](long e) { return e == 0; }));
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = K(-c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, K(-c));
        return *this;
    }
    LaurentPoly& operator*=(const K& s) {
        if (jumploci::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c = K(c * s);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const K& s) { return a *= s; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_vars(b);
        LaurentPoly r(a.vars_);
        Exponent e(a.nvars());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, K(ca * cb));
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
    }

    /// Multiplication by the monomial x^shift (a unit of the Laurent ring).
    LaurentPoly shifted(const Exponent& shift) const {
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            for (size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    /// Componentwise minimum exponent over all terms (zeros for the 0 polynomial).
    Exponent min_exponents() const {
        Exponent m(nvars(), 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
            first = false;
        }
        return m;
    }

    long total_degree() const {
        long d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
        return d;
    }

    /// Same polynomial, coefficients mapped through f.
    template <class F>
    auto map_coeffs(F&& f) const {
        using U = std::decay_t<decltype(f(std::declval<const K&>()))>;
        typename LaurentPoly<U>::Terms t;
        for (const auto& [e, c] : terms_) {
            U u = f(c);
            if (!jumploci::is_zero(u)) t.emplace(e, std::move(u));
        }
        return LaurentPoly<U>(vars_, std::move(t));
    }

    void add_term(const Exponent& e, const K& c) {
        if (jumploci::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (inserted) return;
        it->second += c;
        if (jumploci::is_zero(it->second)) terms_.erase(it);
    }

   private:
    VarList vars_;
    Terms terms_;

    void check_vars(const LaurentPoly& o) const {
        if (vars_ != o.vars_ && *vars_ != *o.vars_)
            throw Error(ErrorKind::VariableMismatch, "Laurent polynomials over different variable lists");
    }
};

using QLaurent = LaurentPoly<Rational>;
using CLaurent = LaurentPoly<CycloNum>;

template <class K>
bool is_zero(const LaurentPoly<K>& p) noexcept {
    return p.is_zero();
}

inline CLaurent to_cyclo(const QLaurent& p) {
    return p.map_coeffs([](const Rational& q) { return CycloNum(q); });
}

/// Value at the torsion point x_i = exp(2 pi i q_i), computed in Q(zeta_N)
/// with N the lcm of the point's order and the coefficient levels.
template <class K>
CycloNum evaluate_at_character(const LaurentPoly<K>& p, const std::vector<RootOfUnity>& rho) {
    if (rho.size() != p.nvars()) throw Error(ErrorKind::DimensionMismatch, "character length differs from variable count");
    unsigned long n = character_order(rho);
    if constexpr (std::is_same_v<K, CycloNum>)
        for (const auto& [e, c] : p.terms()) n = std::lcm(n, c.level());
    std::vector<long> num(rho.size());
    for (size_t i = 0; i < rho.size(); ++i) {
        Rational scaled = rho[i].q() * Rational(static_cast<long>(n));
        num[i] = scaled.get_num().get_si();
    }
    const long ln = static_cast<long>(n);
    auto exponent_of = [&](const Exponent& e) {
        long s = 0;
        for (size_t i = 0; i < e.size(); ++i) s = (s + (e[i] % ln) * num[i]) % ln;
        return static_cast<size_t>((s + ln) % ln);
    };
    if constexpr (std::is_same_v<K, Rational>) {
        std::vector<Rational> acc(n, Rational(0));
        for (const auto& [e, c] : p.terms()) acc[exponent_of(e)] += c;
        return CycloNum(n, std::move(acc));
    } else {
        std::map<size_t, CycloNum> buckets;
        for (const auto& [e, c] : p.terms()) buckets[exponent_of(e)] += c;
        CycloNum acc(0);
        for (const auto& [k, c] : buckets) acc += c * CycloNum::root(n, static_cast<long>(k));
        return acc;
    }
}

/// x_i -> translate_i * t_1^{E[i][0]} ... t_d^{E[i][d-1]}.
template <class K>
CLaurent substitute_monomial(const LaurentPoly<K>& p, const IntMatrix& exponents,
                             const std::vector<RootOfUnity>& translate, VarList new_vars = nullptr) {
    const size_t n = p.nvars(), d = exponents.cols();
    if (exponents.rows() != n || translate.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "substitution needs one exponent row and translate per variable");
    if (!new_vars) new_vars = param_vars(d);
    if (new_vars->size() != d) throw Error(ErrorKind::DimensionMismatch, "parameter name count");
    std::vector<CycloNum> scale;
    scale.reserve(n);
    for (const auto& r : translate) scale.push_back(CycloNum::of_root(r));
    CLaurent out(new_vars);
    for (const auto& [e, c] : p.terms()) {
        Exponent f(d, 0);
        CycloNum coeff = CycloNum(c);
        for (size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            for (size_t j = 0; j < d; ++j) f[j] += e[i] * exponents(i, j);
            const long k = e[i] * translate[i].q().get_num().get_si();
            if (root_order(translate[i]) != 1) coeff *= CycloNum::root(root_order(translate[i]), k);
        }
        out.add_term(f, coeff);
    }
    return out;
}

/// Exact quotient a / b in the polynomial ring (both with nonnegative
/// exponents), by lex leading-term division. Throws when b does not divide a.
template <class K>
LaurentPoly<K> exact_divide(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero polynomial");
    const auto& [lb, cb] = *b.terms().rbegin();
    const K inv_cb = inverse(cb);
    LaurentPoly<K> rem = a, quo(a.vars());
    while (!rem.is_zero()) {
        const auto& [lr, cr] = *rem.terms().rbegin();
        Exponent q(lr.size());
        for (size_t i = 0; i < q.size(); ++i) {
            q[i] = lr[i] - lb[i];
            if (q[i] < 0) throw Error(ErrorKind::DivisionByZero, "inexact multivariate division");
        }
        LaurentPoly<K> t = LaurentPoly<K>::monomial(a.vars(), q, K(cr * inv_cb));
        quo += t;
        rem -= t * b;
    }
    return quo;
}

/// One-variable Laurent polynomial as t^shift * f(t) with f(0) != 0.
template <class K>
std::pair<UniPoly<K>, long> to_unipoly(const LaurentPoly<K>& p) {
    if (p.nvars() != 1) throw Error(ErrorKind::DimensionMismatch, "expected a univariate Laurent polynomial");
    if (p.is_zero()) return {UniPoly<K>(), 0};
    const long lo = p.terms().begin()->first[0];
    const long hi = p.terms().rbegin()->first[0];
    std::vector<K> c(static_cast<size_t>(hi - lo + 1), K(0));
    for (const auto& [e, k] : p.terms()) c[static_cast<size_t>(e[0] - lo)] = k;
    return {UniPoly<K>(std::move(c)), lo};
}

// ---------------------------------------------------------------------------
// Text form: "3/2*x1^-2*x2 + -1" ; terms joined by '+', a leading '-' on a
// term negates it, '*' separates coefficient and factors.

template <class K>
std::string to_string(const LaurentPoly<K>& p) {
    if (p.is_zero()) return "0";
    const auto& names = *p.vars();
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        std::string factors;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += names[i];
            if (e[i] != 1) factors += "^" + std::to_string(e[i]);
        }
        std::string cs = to_string(c);
        std::string term;
        if (factors.empty()) term = cs;
        else if (cs == "1") term = factors;
        else if (cs == "-1") term = "-" + factors;
        else term = cs + "*" + factors;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

}  // namespace detail

inline QLaurent parse_laurent(const std::string& text, const VarList& vars) {
    QLaurent result(vars);
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::ParseError, why + " at column " + std::to_string(pos + 1) + " in '" + text + "'");
    };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> long {
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || !std::isdigit(static_cast<unsigned char>(text[pos - 1]))) fail("expected integer");
        return std::stol(text.substr(start, pos - start));
    };
    bool expect_term = true;
    bool negate = false;
    while (true) {
        skip();
        if (pos >= text.size()) break;
        char ch = text[pos];
        if (ch == '+' || ch == '-') {
            if (ch == '-') negate = !negate;
            ++pos;
            expect_term = true;
            continue;
        }
        if (!expect_term) fail("expected '+' or '-'");
        Rational coeff(1);
        Exponent e(vars->size(), 0);
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
            coeff = parse_rational(text.substr(start, pos - start));
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            } else {
                need_factor = false;
            }
        }
        while (need_factor) {
            if (pos >= text.size() || !detail::is_ident_start(text[pos])) fail("expected variable");
            size_t start = pos;
            while (pos < text.size() && detail::is_ident_char(text[pos])) ++pos;
            std::string name = text.substr(start, pos - start);
            auto it = std::find(vars->begin(), vars->end(), name);
            if (it == vars->end()) fail("unknown variable '" + name + "'");
            long power = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                power = read_int();
                skip();
            }
            e[static_cast<size_t>(it - vars->begin())] += power;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            } else {
                need_factor = false;
            }
        }
        result.add_term(e, negate ? Rational(-coeff) : coeff);
        negate = false;
        expect_term = false;
    }
    if (expect_term && !result.is_zero()) fail("dangling sign");
    return result;
}

}  // namespace jumploci

#endif
