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

#ifndef JUMPLOCI_CYCLOTOMIC_HPP
#define JUMPLOCI_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace jumploci {

using QPoly = UniPoly<Rational>;

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> lo, hi;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

/// Phi_N, memoized. With p the largest prime factor of N and m = N / p:
/// Phi_N(x) = Phi_m(x^p) when p divides m, and Phi_m(x^p) / Phi_m(x) otherwise.
inline const QPoly& cyclotomic_polynomial(unsigned long n) {
    if (n == 0) throw Error(ErrorKind::IndexOutOfRange, "cyclotomic_polynomial needs N >= 1");
    static std::mutex mu;
    static std::map<unsigned long, QPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    QPoly p;
    if (n == 1) {
        p = QPoly{Rational(-1), Rational(1)};
    } else {
        unsigned long prime = n, rest = n;
        for (unsigned long f = 2; f * f <= rest; ++f)
            while (rest % f == 0) {
                prime = f;
                rest /= f;
            }
        if (rest > 1) prime = rest;
        const unsigned long m = n / prime;
        const QPoly& base = cyclotomic_polynomial(m);
        p = base.inflate(prime);
        if (m % prime != 0) p = exact_div(p, base);
    }
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(p)).first->second;  // std::map nodes are stable
}

/// A root of unity exp(2 pi i q), q kept in [0, 1).
class RootOfUnity {
   public:
    RootOfUnity() = default;
    explicit RootOfUnity(const Rational& q) : q_(mod_one(q)) {}
    const Rational& q() const noexcept { return q_; }
    RootOfUnity inverse() const { return RootOfUnity(Rational(-q_)); }
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

   private:
    Rational q_{0};
};

inline unsigned long root_order(const RootOfUnity& r) { return to_ulong_checked(r.q().get_den(), "root order"); }

inline unsigned long character_order(const std::vector<RootOfUnity>& v) {
    Integer l = 1;
    for (const auto& r : v) l = lcm(l, Integer(r.q().get_den()));
    return to_ulong_checked(l, "character order");
}

inline std::vector<RootOfUnity> to_roots(const std::vector<Rational>& q) {
    std::vector<RootOfUnity> out;
    out.reserve(q.size());
    for (const auto& x : q) out.emplace_back(x);
    return out;
}

/// Element of Q(zeta_N), stored as coefficients of a polynomial of degree
/// < phi(N) in zeta_N, i.e. a residue in Q[x] / Phi_N(x).
class CycloNum {
   public:
    CycloNum() : level_(1), c_{Rational(0)} {}
    CycloNum(int v) : level_(1), c_{Rational(v)} {}  // NOLINT: implicit on purpose, acts as a field scalar
    CycloNum(const Rational& v) : level_(1), c_{v} {}  // NOLINT

    /// From coefficients in zeta_N; reduced modulo Phi_N.
    CycloNum(unsigned long level, std::vector<Rational> coeffs) : level_(level) {
        c_ = reduce(level, std::move(coeffs));
    }

    /// zeta_N^k.
    static CycloNum root(unsigned long level, long k) {
        const long n = static_cast<long>(level);
        const size_t e = static_cast<size_t>(((k % n) + n) % n);
        std::vector<Rational> v(e + 1, Rational(0));
        v[e] = 1;
        return CycloNum(level, std::move(v));
    }
    static CycloNum of_root(const RootOfUnity& r) {
        const unsigned long n = root_order(r);
        return root(n, r.q().get_num().get_si());
    }

    unsigned long level() const noexcept { return level_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept {
        for (const auto& a : c_)
            if (sgn(a) != 0) return false;
        return true;
    }
    /// True when the value lies in Q (all higher coefficients vanish).
    bool is_rational() const noexcept {
        for (size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }
    Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

    /// Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N). Requires N | M.
    CycloNum embed(unsigned long target) const {
        if (target % level_ != 0) throw Error(ErrorKind::DimensionMismatch, "embedding level must be a multiple");
        if (target == level_) return *this;
        const unsigned long step = target / level_;
        std::vector<Rational> v((c_.size() - 1) * step + 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
        return CycloNum(target, std::move(v));
    }

    /// Preimage under embed(level()) from Q(zeta_target), if the value lies there.
    std::optional<CycloNum> restrict_to(unsigned long target) const {
        if (level_ % target != 0) throw Error(ErrorKind::DimensionMismatch, "restriction level must divide");
        const size_t dn = euler_phi(target), dm = c_.size();
        Matrix<Rational> basis(dm, dn, Rational(0));
        for (size_t j = 0; j < dn; ++j) {
            CycloNum img = CycloNum::root(target, static_cast<long>(j)).embed(level_);
            for (size_t i = 0; i < dm; ++i) basis(i, j) = img.c_[i];
        }
        auto sol = solve_linear(basis, c_);
        if (!sol) return std::nullopt;
        return CycloNum(target, std::move(*sol));
    }

    /// Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
    CycloNum galois(unsigned long k) const {
        std::vector<Rational> v((c_.size() - 1) * k + 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
        return CycloNum(level_, std::move(v));
    }

    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    CycloNum& operator+=(const CycloNum& o) {
        if (o.level_ == level_) {
            for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
            return *this;
        }
        auto [a, b] = unify(*this, o);
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return *this = std::move(a);
    }
    CycloNum& operator-=(const CycloNum& o) { return *this += -o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
    CycloNum& operator/=(const CycloNum& o) { return *this = *this * o.inv(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inv(); }
    friend CycloNum operator*(const CycloNum& x, const CycloNum& y) {
        if (x.level_ == 1 || y.level_ == 1) {  // scalar fast path
            const bool xs = x.level_ == 1;
            const Rational& s = xs ? x.c_[0] : y.c_[0];
            CycloNum r = xs ? y : x;
            for (auto& a : r.c_) a *= s;
            return r;
        }
        auto [a, b] = unify(x, y);
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                if (sgn(b.c_[j]) != 0) v[i + j] += a.c_[i] * b.c_[j];
        }
        return CycloNum(a.level_, std::move(v));
    }

    CycloNum inv() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in Q(zeta_" + std::to_string(level_) + ")");
        if (level_ == 1) return CycloNum(Rational(1) / c_[0]);
        auto [g, s] = half_xgcd(QPoly(c_), cyclotomic_polynomial(level_));
        // Phi_N is irreducible, so g = 1 for any nonzero residue
        return CycloNum(level_, s.coeffs());
    }

    friend bool operator==(const CycloNum& x, const CycloNum& y) {
        if (x.level_ == y.level_) return x.c_ == y.c_;
        auto [a, b] = unify(x, y);
        return a.c_ == b.c_;
    }

   private:
    unsigned long level_;
    std::vector<Rational> c_;  // length phi(level_)

    static std::vector<Rational> reduce(unsigned long level, std::vector<Rational> v) {
        const QPoly& phi = cyclotomic_polynomial(level);
        const auto& pc = phi.coeffs();
        const size_t d = pc.size() - 1;
        for (size_t i = v.size(); i-- > d;) {
            if (sgn(v[i]) == 0) continue;
            const Rational f = v[i];
            for (size_t j = 0; j <= d; ++j)
                if (sgn(pc[j]) != 0) v[i - d + j] -= f * pc[j];
        }
        v.resize(d, Rational(0));
        return v;
    }

    static std::pair<CycloNum, CycloNum> unify(const CycloNum& a, const CycloNum& b) {
        const unsigned long l = std::lcm(a.level_, b.level_);
        return {a.embed(l), b.embed(l)};
    }
};

inline bool is_zero(const CycloNum& a) noexcept { return a.is_zero(); }
inline CycloNum inverse(const CycloNum& a) { return a.inv(); }

inline std::string to_string(const CycloNum& a) {
    if (a.is_rational()) return to_string(a.rational_part());
    std::string z = "z" + std::to_string(a.level());
    std::string s;
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        const Rational& c = a.coeffs()[i];
        if (sgn(c) == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += to_string(c);
            continue;
        }
        if (c != 1) s += to_string(c) + "*";
        s += z;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return "(" + s + ")";
}

}  // namespace jumploci

#endif
