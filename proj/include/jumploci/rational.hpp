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

#ifndef JUMPLOCI_RATIONAL_HPP
#define JUMPLOCI_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace jumploci {

// mpq_class arithmetic keeps canonical inputs canonical (lowest terms,
// positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// The two-argument mpq_class constructor does not reduce; always build
// fractions through this.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with denominator 0");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) noexcept { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) {
    if (is_zero(q)) throw Error(ErrorKind::DivisionByZero, "inverse of rational 0");
    return Rational(1) / q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {
inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}
}  // namespace detail

/// Parses "p", "p/q", "-p/q" (optionally "+p"). Throws ParseError otherwise.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    const Integer d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(std::string(num)), d);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

/// Comma-separated rationals, e.g. "1/2,1/3,0".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string join_rationals(const std::vector<Rational>& v, std::string_view sep = ",") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += to_string(v[i]);
    }
    return s;
}

inline Integer floor_of(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

/// Representative of q modulo 1 in [0, 1).
inline Rational mod_one(const Rational& q) { return Rational(q - Rational(floor_of(q))); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline unsigned long to_ulong_checked(const Integer& z, std::string_view what) {
    if (sgn(z) < 0 || !z.fits_ulong_p())
        throw Error(ErrorKind::SizeLimit, std::string(what) + " does not fit a machine word");
    return z.get_ui();
}

}  // namespace jumploci

#endif
