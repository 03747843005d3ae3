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

#ifndef JUMPLOCI_FOX_HPP
#define JUMPLOCI_FOX_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace jumploci {

struct Syllable {
    size_t gen;
    long exp;
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in a free group: adjacent syllables always have
/// distinct generators and nonzero exponents.
class Word {
   public:
    Word() = default;
    explicit Word(const std::vector<Syllable>& syllables) {
        for (const auto& s : syllables) push(s);
    }

    const std::vector<Syllable>& syllables() const noexcept { return s_; }
    bool empty() const noexcept { return s_.empty(); }

    void push(Syllable s) {
        if (s.exp == 0) return;
        if (!s_.empty() && s_.back().gen == s.gen) {
            s_.back().exp += s.exp;
            if (s_.back().exp == 0) s_.pop_back();
            return;
        }
        s_.push_back(s);
    }

    Word inverse() const {
        Word w;
        for (auto it = s_.rbegin(); it != s_.rend(); ++it) w.push({it->gen, -it->exp});
        return w;
    }
    friend Word operator*(Word a, const Word& b) {
        for (const auto& s : b.s_) a.push(s);
        return a;
    }
    friend bool operator==(const Word&, const Word&) = default;

    /// Total exponent of each generator.
    Exponent abelianize(size_t n) const {
        Exponent e(n, 0);
        for (const auto& s : s_) e.at(s.gen) += s.exp;
        return e;
    }

    /// Letter-by-letter expansion: x^3 -> (x,+1)(x,+1)(x,+1).
    std::vector<Syllable> letters() const {
        std::vector<Syllable> out;
        for (const auto& s : s_) {
            const long sign = s.exp > 0 ? 1 : -1;
            for (long k = 0; k < s.exp * sign; ++k) out.push_back({s.gen, sign});
        }
        return out;
    }

   private:
    std::vector<Syllable> s_;
};

/// Commutator a b a^-1 b^-1.
inline Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

inline Word generator_word(size_t i, long e = 1) { return Word({{i, e}}); }

struct Presentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<Word> relators;
    bool formal = false;            // user assertion: the group is 1-formal
    bool quasi_projective = false;  // user assertion: the group is a quasi-projective fundamental group

    size_t num_generators() const noexcept { return generators.size(); }
    size_t num_relators() const noexcept { return relators.size(); }
    VarList vars() const { return make_vars(generators); }

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

inline void validate(const Presentation& p) {
    if (p.generators.empty()) throw Error(ErrorKind::EmptyGeneratorList, "presentation has no generators");
    for (const auto& r : p.relators)
        for (const auto& s : r.syllables())
            if (s.gen >= p.num_generators())
                throw Error(ErrorKind::IndexOutOfRange, "relator uses generator index " + std::to_string(s.gen));
}

/// Abelianized Fox derivative d w / d x_i as a Laurent polynomial in the generators.
inline QLaurent fox_derivative(const Word& w, size_t i, const VarList& vars) {
    const size_t n = vars->size();
    if (i >= n) throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(i));
    QLaurent out(vars);
    Exponent prefix(n, 0);
    for (const auto& s : w.syllables()) {
        if (s.gen >= n) throw Error(ErrorKind::IndexOutOfRange, "word uses generator index " + std::to_string(s.gen));
        if (s.gen == i) {
            // d(x^e)/dx = 1 + x + ... + x^{e-1} for e > 0, -(x^-1 + ... + x^e) for e < 0
            Exponent e = prefix;
            if (s.exp > 0) {
                for (long k = 0; k < s.exp; ++k, ++e[i]) out.add_term(e, Rational(1));
            } else {
                for (long k = 0; k < -s.exp; ++k) {
                    --e[i];
                    out.add_term(e, Rational(-1));
                }
            }
        }
        prefix[s.gen] += s.exp;
    }
    return out;
}

/// m x n matrix of abelianized Fox derivatives d r_j / d x_i.
inline Matrix<QLaurent> alexander_matrix(const Presentation& p) {
    const VarList vars = p.vars();
    Matrix<QLaurent> j(p.num_relators(), p.num_generators(), QLaurent(vars));
    for (size_t r = 0; r < p.num_relators(); ++r)
        for (size_t i = 0; i < p.num_generators(); ++i) j(r, i) = fox_derivative(p.relators[r], i, vars);
    return j;
}

/// E[j][i] = total exponent of generator i in relator j.
inline IntMatrix exponent_matrix(const Presentation& p) {
    IntMatrix e(p.num_relators(), p.num_generators(), 0);
    for (size_t r = 0; r < p.num_relators(); ++r) {
        Exponent a = p.relators[r].abelianize(p.num_generators());
        for (size_t i = 0; i < a.size(); ++i) e(r, i) = a[i];
    }
    return e;
}

inline size_t first_betti(const Presentation& p) {
    return p.num_generators() - integer_rank(exponent_matrix(p));
}

/// rho kills every relator: E q is integral.
inline bool validate_character(const Presentation& p, const std::vector<Rational>& q) {
    if (q.size() != p.num_generators()) return false;
    const IntMatrix e = exponent_matrix(p);
    for (size_t r = 0; r < e.rows(); ++r) {
        Rational s = 0;
        for (size_t i = 0; i < e.cols(); ++i) s += Rational(e(r, i)) * q[i];
        if (!is_integer(s)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Presentation files:
//   group <name>
//   gens <id> <id> ...
//   rel <word>              word := token (space token)* | "1"; token := id | id^<int>
//   formal                  optional assertion flags
//   quasiprojective

namespace detail {

inline bool valid_identifier(const std::string& s) {
    if (s.empty() || !is_ident_start(s[0])) return false;
    return std::all_of(s.begin(), s.end(), is_ident_char);
}

inline std::string strip_comment(const std::string& line) { return line.substr(0, line.find('#')); }

// Splits on whitespace, keeping the 1-based column of each token.
inline std::vector<std::pair<std::string, size_t>> tokenize(const std::string& line) {
    std::vector<std::pair<std::string, size_t>> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.emplace_back(line.substr(start, i - start), start + 1);
    }
    return out;
}

[[noreturn]] inline void parse_fail(ErrorKind kind, size_t line, size_t col, const std::string& msg) {
    throw Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

}  // namespace detail

/// Parses a word against a generator list; line/column are for diagnostics.
inline Word parse_word(const std::vector<std::pair<std::string, size_t>>& tokens,
                       const std::vector<std::string>& gens, size_t line = 1) {
    Word w;
    if (tokens.size() == 1 && tokens[0].first == "1") return w;
    for (const auto& [tok, col] : tokens) {
        const size_t caret = tok.find('^');
        const std::string id = tok.substr(0, caret);
        long e = 1;
        if (!detail::valid_identifier(id)) detail::parse_fail(ErrorKind::ParseError, line, col, "bad token '" + tok + "'");
        if (caret != std::string::npos) {
            const std::string ex = tok.substr(caret + 1);
            size_t used = 0;
            try {
                e = std::stol(ex, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (ex.empty() || used != ex.size())
                detail::parse_fail(ErrorKind::ParseError, line, col + caret + 1, "bad exponent in '" + tok + "'");
        }
        auto it = std::find(gens.begin(), gens.end(), id);
        if (it == gens.end()) detail::parse_fail(ErrorKind::UnknownGenerator, line, col, "unknown generator '" + id + "'");
        w.push({static_cast<size_t>(it - gens.begin()), e});
    }
    return w;
}

inline Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
    return parse_word(detail::tokenize(text), gens);
}

inline Presentation parse_presentation(const std::string& text) {
    Presentation p;
    bool have_group = false, have_gens = false;
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = detail::tokenize(detail::strip_comment(raw));
        if (toks.empty()) continue;
        const std::string& kw = toks[0].first;
        std::vector<std::pair<std::string, size_t>> args(toks.begin() + 1, toks.end());
        if (kw == "group") {
            if (have_group) detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "duplicate 'group'");
            if (args.size() != 1) detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "'group' takes one name");
            p.name = args[0].first;
            have_group = true;
        } else if (kw == "gens") {
            if (have_gens) detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "duplicate 'gens'");
            if (args.empty()) detail::parse_fail(ErrorKind::EmptyGeneratorList, lineno, toks[0].second, "no generators");
            for (const auto& [id, col] : args) {
                if (!detail::valid_identifier(id))
                    detail::parse_fail(ErrorKind::ParseError, lineno, col, "bad generator name '" + id + "'");
                if (std::find(p.generators.begin(), p.generators.end(), id) != p.generators.end())
                    detail::parse_fail(ErrorKind::ParseError, lineno, col, "duplicate generator '" + id + "'");
                p.generators.push_back(id);
            }
            have_gens = true;
        } else if (kw == "rel") {
            if (!have_gens) detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "'rel' before 'gens'");
            if (args.empty()) detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "empty relator (use 1)");
            p.relators.push_back(parse_word(args, p.generators, lineno));
        } else if (kw == "formal" && args.empty()) {
            p.formal = true;
        } else if (kw == "quasiprojective" && args.empty()) {
            p.quasi_projective = true;
        } else {
            detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "unexpected '" + kw + "'");
        }
    }
    if (!have_group) throw Error(ErrorKind::ParseError, "missing 'group' line");
    if (!have_gens) throw Error(ErrorKind::EmptyGeneratorList, "missing 'gens' line");
    return p;
}

inline std::string word_to_string(const Word& w, const std::vector<std::string>& gens) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& syl : w.syllables()) {
        if (!s.empty()) s += ' ';
        s += gens.at(syl.gen);
        if (syl.exp != 1) s += "^" + std::to_string(syl.exp);
    }
    return s;
}

inline std::string emit_presentation(const Presentation& p) {
    std::string s = "group " + p.name + "\ngens";
    for (const auto& g : p.generators) s += " " + g;
    s += "\n";
    for (const auto& r : p.relators) s += "rel " + word_to_string(r, p.generators) + "\n";
    if (p.formal) s += "formal\n";
    if (p.quasi_projective) s += "quasiprojective\n";
    return s;
}

}  // namespace jumploci

#endif
