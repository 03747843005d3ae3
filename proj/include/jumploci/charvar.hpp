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

#ifndef JUMPLOCI_CHARVAR_HPP
#define JUMPLOCI_CHARVAR_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "fox.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "poly_linalg.hpp"
#include "ring.hpp"
#include "roots.hpp"

namespace jumploci {

/// Everything derived once from a presentation and reused across queries.
struct GroupData {
    Presentation pres;
    Matrix<QLaurent> alexander;
    IntMatrix exponents;
    CupData cup;

    explicit GroupData(Presentation p)
        : pres(std::move(p)), alexander(alexander_matrix(pres)), exponents(exponent_matrix(pres)), cup(cup_data(pres)) {}

    size_t n() const noexcept { return pres.num_generators(); }
    size_t b1() const noexcept { return cup.b1(); }
};

/// A torsion character: coordinate q_i stands for exp(2 pi i q_i), q_i in [0, 1).
class Character {
   public:
    Character(const GroupData& g, const std::vector<Rational>& q) {
        if (q.size() != g.n())
            throw Error(ErrorKind::InvalidCharacter, "expected " + std::to_string(g.n()) + " coordinates, got " +
                                                         std::to_string(q.size()));
        for (const auto& x : q) q_.push_back(mod_one(x));
        if (!validate_character(g.pres, q_)) throw Error(ErrorKind::InvalidCharacter, "character does not kill every relator");
    }

    const std::vector<Rational>& q() const noexcept { return q_; }
    std::vector<RootOfUnity> roots() const { return to_roots(q_); }
    unsigned long order() const { return character_order(roots()); }
    bool is_trivial() const {
        return std::all_of(q_.begin(), q_.end(), [](const Rational& x) { return sgn(x) == 0; });
    }
    std::vector<Rational> inverse_q() const {
        std::vector<Rational> r;
        for (const auto& x : q_) r.push_back(mod_one(Rational(-x)));
        return r;
    }

   private:
    std::vector<Rational> q_;
};

/// Alexander matrix evaluated at the character, over Q(zeta_N).
inline Matrix<CycloNum> evaluated_alexander(const GroupData& g, const Character& rho) {
    const auto roots = rho.roots();
    return g.alexander.map([&](const QLaurent& p) { return evaluate_at_character(p, roots); });
}

inline size_t twisted_h0_dim(const GroupData&, const Character& rho) { return rho.is_trivial() ? 1 : 0; }

/// dim H^1(G, C_rho) = (n - rank d1(rho)) - rank J(rho).
inline size_t twisted_h1_dim(const GroupData& g, const Character& rho) {
    const size_t d1 = rho.is_trivial() ? 0 : 1;
    return g.n() - d1 - rank_over_field(evaluated_alexander(g, rho));
}

inline bool charvar_membership(const GroupData& g, const Character& rho, size_t k) {
    return twisted_h1_dim(g, rho) >= k;
}

struct SymmetryResult {
    size_t dim_at_rho;
    size_t dim_at_inverse;
    bool equal;
};

inline SymmetryResult symmetry_check(const GroupData& g, const Character& rho) {
    const size_t a = twisted_h1_dim(g, rho);
    const size_t b = twisted_h1_dim(g, Character(g, rho.inverse_q()));
    return {a, b, a == b};
}

// ---------------------------------------------------------------------------
// Torus specs: translate * t^E, a d-parameter monomial subtorus.

struct TorusSpec {
    std::string name;
    size_t params = 0;
    std::vector<Rational> translate;  // length n, in [0, 1)
    IntMatrix exponents;              // n x params

    size_t n() const noexcept { return translate.size(); }
    std::vector<RootOfUnity> translate_roots() const { return to_roots(translate); }

    /// Coordinates q_i = translate_i + sum_j E[i][j] u_j.
    std::vector<Rational> point(const std::vector<Rational>& u) const {
        std::vector<Rational> q;
        for (size_t i = 0; i < n(); ++i) {
            Rational s = translate[i];
            for (size_t j = 0; j < params; ++j) s += Rational(exponents(i, j)) * u.at(j);
            q.push_back(mod_one(s));
        }
        return q;
    }

    friend bool operator==(const TorusSpec&, const TorusSpec&) = default;
};

/// Full torus of an n-generator group: identity exponents, trivial translate.
inline TorusSpec full_torus(size_t n, std::string name = "full") {
    TorusSpec w{std::move(name), n, std::vector<Rational>(n, Rational(0)), IntMatrix(n, n, 0)};
    for (size_t i = 0; i < n; ++i) w.exponents(i, i) = 1;
    return w;
}

/// Checks the spec against a group: sizes, E * exponents = 0, E * translate integral.
inline void validate_spec(const GroupData& g, const TorusSpec& w) {
    if (w.n() != g.n() || w.exponents.rows() != g.n())
        throw Error(ErrorKind::SpecMismatch, "torus '" + w.name + "' has " + std::to_string(w.n()) +
                                                 " coordinates, group has " + std::to_string(g.n()) + " generators");
    if (w.exponents.cols() != w.params || w.params == 0)
        throw Error(ErrorKind::SpecMismatch, "torus '" + w.name + "' parameter count");
    if (integer_rank(w.exponents) != w.params)
        throw Error(ErrorKind::RankDeficientSpec, "torus '" + w.name + "' exponent matrix is not of full rank");
    const IntMatrix& e = g.exponents;
    for (size_t r = 0; r < e.rows(); ++r) {
        for (size_t j = 0; j < w.params; ++j) {
            long s = 0;
            for (size_t i = 0; i < g.n(); ++i) s += e(r, i) * w.exponents(i, j);
            if (s != 0) throw Error(ErrorKind::SpecMismatch, "torus '" + w.name + "' leaves the character variety");
        }
    }
    if (!validate_character(g.pres, w.translate))
        throw Error(ErrorKind::SpecMismatch, "translate of '" + w.name + "' is not a character");
}

/// Exact membership test: q = translate + E u (mod 1) for some rational u.
inline bool on_torus(const TorusSpec& w, const std::vector<Rational>& q) {
    if (q.size() != w.n()) return false;
    const SmithData s = smith_form(w.exponents);
    for (size_t i = s.factors.size(); i < w.n(); ++i) {
        Rational v = 0;
        for (size_t k = 0; k < w.n(); ++k) v += Rational(s.left(i, k)) * (q[k] - w.translate[k]);
        if (!is_integer(v)) return false;
    }
    return true;
}

inline Matrix<CLaurent> substituted_alexander(const GroupData& g, const TorusSpec& w) {
    const auto roots = w.translate_roots();
    const VarList params = param_vars(w.params);
    return g.alexander.map([&](const QLaurent& p) { return substitute_monomial(p, w.exponents, roots, params); });
}

/// dim H^1 at a generic point of the spec.
inline size_t generic_h1_dim_along(const GroupData& g, const TorusSpec& w) {
    validate_spec(g, w);
    const size_t r = generic_rank(substituted_alexander(g, w));
    return g.n() - 1 - r;
}

// ---------------------------------------------------------------------------
// Rank drops along a one-parameter torus.

struct RankDropPoint {
    Rational param;            // t = exp(2 pi i param)
    unsigned long param_order; // order of t
    size_t rank;               // rank of the matrix at t
};

struct RankDropReport {
    size_t generic_rank = 0;
    UniPoly<CycloNum> minor_gcd;  // monic, no factor t
    QPoly norm;                   // product of Galois conjugates of minor_gcd
    CyclotomicFactors cyclotomic;
    std::vector<RankDropPoint> points;          // ascending in param
    std::optional<QPoly> non_torsion_factor;    // monic, present only when of positive degree
};

inline UniPoly<CycloNum> to_unipoly_nonneg(const CLaurent& p) {
    auto [f, lo] = to_unipoly(p);
    if (lo < 0) throw Error(ErrorKind::DimensionMismatch, "negative exponent after normalization");
    return UniPoly<CycloNum>::monomial(CycloNum(1), static_cast<size_t>(lo)) * f;
}

/// Locates every parameter value where the rank of a one-variable Laurent
/// matrix falls below its generic rank, certifying each candidate root of unity
/// by exact evaluation.
inline RankDropReport rank_drop_points(const Matrix<CLaurent>& m) {
    RankDropReport rep;
    rep.generic_rank = generic_rank(m);
    const Matrix<CLaurent> cleared = clear_negative_exponents(m);
    for (size_t i = 0; i < cleared.rows(); ++i)
        for (size_t j = 0; j < cleared.cols(); ++j)
            if (cleared(i, j).nvars() != 1) throw Error(ErrorKind::SpecMismatch, "rank drops need a one-parameter matrix");
    const Matrix<UniPoly<CycloNum>> uni = cleared.map(to_unipoly_nonneg);
    UniPoly<CycloNum> g = minor_gcd_1d(uni, rep.generic_rank);
    g = g.shift_down(g.valuation()).monic();  // t = 0 is off the torus
    rep.minor_gcd = g;
    rep.norm = norm_to_rationals(g);
    rep.cyclotomic = cyclotomic_part(rep.norm);
    if (rep.cyclotomic.remainder.degree() > 0) rep.non_torsion_factor = rep.cyclotomic.remainder.monic();
    for (const auto& [n, mult] : rep.cyclotomic.factors) {
        for (unsigned long k = 0; k < n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            const CycloNum t = CycloNum::root(n, static_cast<long>(k));
            if (!is_zero(g.evaluate(t))) continue;
            const std::vector<RootOfUnity> at{RootOfUnity(make_rational(static_cast<long>(k), static_cast<long>(n)))};
            const size_t rk = rank_over_field(m.map([&](const CLaurent& p) { return evaluate_at_character(p, at); }));
            if (rk >= rep.generic_rank)
                throw Error(ErrorKind::RankTooLarge, "certification failed at a root of the minor gcd");
            rep.points.push_back({at[0].q(), n, rk});
        }
    }
    std::sort(rep.points.begin(), rep.points.end(),
              [](const RankDropPoint& a, const RankDropPoint& b) { return a.param < b.param; });
    return rep;
}

struct JumpPoint {
    Rational param;
    unsigned long param_order;
    unsigned long character_order;
    std::vector<Rational> character;
    size_t h1;
    bool trivial_character;
};

struct JumpReport {
    size_t generic_dim = 0;
    RankDropReport drops;
    std::vector<JumpPoint> torsion_points;     // rank drops of the Alexander matrix
    std::vector<JumpPoint> trivial_char_params; // where the composed character is trivial
};

/// Parameter values u in [0, 1) with translate + e u = 0 (mod 1), e a single column.
inline std::vector<Rational> trivial_character_params(const TorusSpec& w) {
    std::vector<Rational> out;
    size_t pivot = w.n();
    for (size_t i = 0; i < w.n(); ++i)
        if (w.exponents(i, 0) != 0) {
            pivot = i;
            break;
        }
    if (pivot == w.n()) return out;
    const long e = w.exponents(pivot, 0);
    for (long j = 0; j < std::labs(e); ++j) {
        Rational u = mod_one(Rational(Rational(j) - w.translate[pivot]) / Rational(e));
        const auto q = w.point({u});
        if (std::all_of(q.begin(), q.end(), [](const Rational& x) { return sgn(x) == 0; })) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline JumpReport jumping_points_1d(const GroupData& g, const TorusSpec& w) {
    validate_spec(g, w);
    if (w.params != 1) throw Error(ErrorKind::SpecMismatch, "jumping points need a one-parameter torus");
    JumpReport rep;
    rep.drops = rank_drop_points(substituted_alexander(g, w));
    rep.generic_dim = g.n() - 1 - rep.drops.generic_rank;
    auto make_point = [&](const Rational& u, unsigned long porder) {
        Character c(g, w.point({u}));
        return JumpPoint{u, porder, c.order(), c.q(), twisted_h1_dim(g, c), c.is_trivial()};
    };
    for (const auto& p : rep.drops.points) rep.torsion_points.push_back(make_point(p.param, p.param_order));
    for (const auto& u : trivial_character_params(w))
        rep.trivial_char_params.push_back(make_point(u, to_ulong_checked(u.get_den(), "parameter order")));
    return rep;
}

// ---------------------------------------------------------------------------
// Curves: genus g with k punctures (proper iff k = 0).

struct CurveDescriptor {
    unsigned genus = 0;
    unsigned punctures = 0;

    bool proper() const noexcept { return punctures == 0; }
    long euler_characteristic() const noexcept { return 2 - 2 * static_cast<long>(genus) - static_cast<long>(punctures); }
    long b1() const noexcept {
        return proper() ? 2 * static_cast<long>(genus) : 2 * static_cast<long>(genus) + static_cast<long>(punctures) - 1;
    }
};

struct ComponentDims {
    long dim_component;
    long generic_dim;
};

/// (dim W, generic dim) = (-chi + e, -chi) with e = 2 for proper curves, 1 for affine ones.
inline ComponentDims component_dims(const CurveDescriptor& s) {
    const long e = s.proper() ? 2 : 1;
    const long dim_w = -s.euler_characteristic() + e;
    if (dim_w <= 0)
        throw Error(ErrorKind::DegenerateCurve, "genus " + std::to_string(s.genus) + " with " + std::to_string(s.punctures) +
                                                    " punctures carries no positive-dimensional pullback torus");
    return {dim_w, -s.euler_characteristic()};
}

/// dim H^1(S, L): b1 for the trivial system, -chi otherwise.
inline long curve_h1_dim(const CurveDescriptor& s, bool trivial) {
    if (trivial) return s.b1();
    if (s.b1() == 0) throw Error(ErrorKind::DegenerateCurve, "curve has no nontrivial rank one local systems");
    return -s.euler_characteristic();
}

// ---------------------------------------------------------------------------
// Torus spec files:
//   torus <name>
//   params <d>
//   translate <q1> ... <qn>
//   row <e1> ... <ed>        exactly n rows

inline TorusSpec parse_torus(const std::string& text) {
    TorusSpec w;
    bool have_name = false, have_params = false, have_translate = false;
    std::vector<std::vector<long>> rows;
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = detail::tokenize(detail::strip_comment(raw));
        if (toks.empty()) continue;
        const std::string& kw = toks[0].first;
        const size_t nargs = toks.size() - 1;
        if (kw == "torus") {
            if (have_name || nargs != 1) detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "bad 'torus' line");
            w.name = toks[1].first;
            have_name = true;
        } else if (kw == "params") {
            if (have_params || nargs != 1) detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "bad 'params' line");
            size_t used = 0;
            long d = 0;
            try {
                d = std::stol(toks[1].first, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != toks[1].first.size() || d < 1)
                detail::parse_fail(ErrorKind::ParseError, lineno, toks[1].second, "params must be a positive integer");
            w.params = static_cast<size_t>(d);
            have_params = true;
        } else if (kw == "translate") {
            if (have_translate || nargs == 0)
                detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "bad 'translate' line");
            for (size_t i = 1; i < toks.size(); ++i) {
                try {
                    w.translate.push_back(mod_one(parse_rational(toks[i].first)));
                } catch (const Error&) {
                    detail::parse_fail(ErrorKind::ParseError, lineno, toks[i].second, "bad rational '" + toks[i].first + "'");
                }
            }
            have_translate = true;
        } else if (kw == "row") {
            if (!have_params) detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "'row' before 'params'");
            if (nargs != w.params)
                detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second,
                                   "row has " + std::to_string(nargs) + " entries, expected " + std::to_string(w.params));
            std::vector<long> row;
            for (size_t i = 1; i < toks.size(); ++i) {
                size_t used = 0;
                long v = 0;
                try {
                    v = std::stol(toks[i].first, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != toks[i].first.size() || toks[i].first.empty())
                    detail::parse_fail(ErrorKind::ParseError, lineno, toks[i].second, "bad integer '" + toks[i].first + "'");
                row.push_back(v);
            }
            rows.push_back(std::move(row));
        } else {
            detail::parse_fail(ErrorKind::ParseError, lineno, toks[0].second, "unexpected '" + kw + "'");
        }
    }
    if (!have_name || !have_params || !have_translate)
        throw Error(ErrorKind::ParseError, "torus file needs 'torus', 'params' and 'translate' lines");
    if (rows.size() != w.translate.size())
        throw Error(ErrorKind::RowCountMismatch, std::to_string(rows.size()) + " rows for " +
                                                     std::to_string(w.translate.size()) + " coordinates");
    w.exponents = IntMatrix(rows.size(), w.params, 0);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < w.params; ++j) w.exponents(i, j) = rows[i][j];
    if (integer_rank(w.exponents) != w.params)
        throw Error(ErrorKind::RankDeficientSpec, "exponent matrix of '" + w.name + "' has rank below " + std::to_string(w.params));
    return w;
}

inline std::string emit_torus(const TorusSpec& w) {
    std::string s = "torus " + w.name + "\nparams " + std::to_string(w.params) + "\ntranslate " +
                    join_rationals(w.translate, " ") + "\n";
    for (size_t i = 0; i < w.n(); ++i) {
        s += "row";
        for (size_t j = 0; j < w.params; ++j) s += " " + std::to_string(w.exponents(i, j));
        s += "\n";
    }
    return s;
}

}  // namespace jumploci

#endif
