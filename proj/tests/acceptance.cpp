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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

#include "oracles.hpp"

using namespace jumploci;

namespace {

GroupData group(const std::string& name) { return GroupData(parse_presentation(oracle::read_data(name))); }
TorusSpec torus(const std::string& name) { return parse_torus(oracle::read_data(name)); }

// Collects the first few mismatches of a criterion.
struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok && failures.size() < 5) failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A& a, const B& b, const std::string& what) {
        std::ostringstream s;
        s << what << ": got " << a << ", expected " << b;
        expect(a == b, s.str());
    }
};

std::string show(const std::vector<Rational>& v) { return "(" + join_rationals(v, ",") + ")"; }

std::vector<Rational> random_closed_form(std::mt19937_64& rng, const CupData& cup) {
    while (true) {
        std::vector<Rational> a(cup.n, Rational(0));
        bool nz = false;
        for (const auto& b : cup.h1_basis) {
            const Rational c = oracle::random_rational(rng, 5, 4);
            nz = nz || sgn(c) != 0;
            for (size_t i = 0; i < cup.n; ++i) a[i] += c * b[i];
        }
        if (nz) return a;
    }
}

Presentation surface_group(const CurveDescriptor& s) {
    Presentation p;
    p.name = "S";
    const size_t n = static_cast<size_t>(s.b1());
    for (size_t i = 0; i < n; ++i) p.generators.push_back("a" + std::to_string(i));
    if (s.proper() && n > 0) {
        Word w;
        for (size_t i = 0; i < s.genus; ++i) w = w * commutator(generator_word(2 * i), generator_word(2 * i + 1));
        p.relators.push_back(w);
    }
    return p;
}

// 1. Curve formulas, checked against surface and free group presentations.
void curves(Check& c) {
    std::mt19937_64 rng(1);
    for (unsigned g = 0; g <= 5; ++g)
        for (unsigned k = 0; k <= 5; ++k) {
            const CurveDescriptor s{g, k};
            const std::string tag = "g=" + std::to_string(g) + ",k=" + std::to_string(k);
            c.equal(curve_h1_dim(s, true), s.b1(), tag + " trivial");
            if (s.b1() > 0) {
                c.equal(curve_h1_dim(s, false), -s.euler_characteristic(), tag + " nontrivial");
                const GroupData gd(surface_group(s));
                c.equal(static_cast<long>(twisted_h1_dim(gd, Character(gd, std::vector<Rational>(gd.n(), Rational(0))))),
                        curve_h1_dim(s, true), tag + " trivial vs presentation");
                const Character rho(gd, oracle::random_character(rng, gd, 12, true));
                c.equal(static_cast<long>(twisted_h1_dim(gd, rho)), curve_h1_dim(s, false), tag + " nontrivial vs presentation");
            }
            const long e = s.proper() ? 2 : 1;
            if (-s.euler_characteristic() + e <= 0) continue;
            const ComponentDims d = component_dims(s);
            c.equal(d.dim_component, -s.euler_characteristic() + e, tag + " dim W");
            c.equal(d.generic_dim, -s.euler_characteristic(), tag + " generic dim");
            c.equal(d.dim_component, s.b1(), tag + " dim W = b1(S)");
            if (!s.proper()) c.equal(d.dim_component, d.generic_dim + 1, tag + " affine dim W = generic + 1");
        }
    const ComponentDims a = component_dims({1, 1}), b = component_dims({2, 0});
    c.expect(a.dim_component == 2 && a.generic_dim == 1, "(g=1,k=1) -> (2,1)");
    c.expect(b.dim_component == 4 && b.generic_dim == 2, "(g=2,proper) -> (4,2)");
}

// 2. Fundamental identity of Fox calculus.
void fox_identity(Check& c) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        const size_t n = 1 + static_cast<size_t>(t % 4);
        std::vector<std::string> names;
        for (size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        const VarList v = make_vars(names);
        const Word w = oracle::random_word(rng, n, 30);
        QLaurent lhs(v);
        for (size_t i = 0; i < n; ++i)
            lhs += fox_derivative(w, i, v) * (QLaurent::variable(v, i) - QLaurent::constant(v, Rational(1)));
        const QLaurent rhs = QLaurent::monomial(v, w.abelianize(n)) - QLaurent::constant(v, Rational(1));
        c.expect(lhs == rhs, "identity fails on " + word_to_string(w, names));
    }
}

// 3. Z^2 has no positive-dimensional jumping.
void commutator_group(Check& c) {
    std::mt19937_64 rng(3);
    const GroupData g = group("t2.grp");
    for (int t = 0; t < 50; ++t) {
        const Character rho(g, oracle::random_character(rng, g, 12, true));
        c.equal(twisted_h1_dim(g, rho), 0u, "twisted at " + show(rho.q()));
        const auto alpha = oracle::random_nonzero_vector(rng, 2);
        c.equal(aomoto_h1_dim(g.cup, OneForm(g.cup, alpha)), 0u, "aomoto at " + show(alpha));
    }
}

// 4. Genus-2 surface group.
void genus_two(Check& c) {
    std::mt19937_64 rng(4);
    const GroupData g = group("genus2.grp");
    for (int t = 0; t < 50; ++t) {
        const Character rho(g, oracle::random_character(rng, g, 12, true));
        c.equal(twisted_h1_dim(g, rho), 2u, "twisted at " + show(rho.q()));
        const auto alpha = oracle::random_nonzero_vector(rng, 4);
        c.equal(aomoto_h1_dim(g.cup, OneForm(g.cup, alpha)), 2u, "aomoto at " + show(alpha));
    }
    c.equal(generic_h1_dim_along(g, torus("genus2-full.trs")), 2u, "generic along the full torus");
    const auto forms = antisymmetrized_cup_forms(g.cup);
    c.expect(forms.size() == 1 && rank_over_field(forms[0]) == 4, "cup form rank 4");
    const CurveDescriptor s{2, 0};
    c.equal(-s.euler_characteristic(), 2L, "-chi");
}

// 5. Symbolic generic dimension agrees with pointwise ranks.
void coherence(Check& c) {
    std::mt19937_64 rng(5);
    const std::vector<std::pair<const char*, const char*>> cases{
        {"f2.grp", "f2-full.trs"},   {"t2.grp", "t2-full.trs"},       {"genus2.grp", "genus2-full.trs"},
        {"xy2.grp", "xy2-full.trs"}, {"xy2.grp", "xy2-sub.trs"},      {"xy2.grp", "xy2-sub-y.trs"},
        {"t2.grp", "t2-sub.trs"},    {"t2.grp", "t2-sub-neg.trs"},    {"f2.grp", "f2-sub.trs"},
        {"genus2.grp", "genus2-sub.trs"}, {"f8.grp", "gamma.trs"},    {"f8.grp", "gamma-sub.trs"}};
    for (const auto& [gname, tname] : cases) {
        const GroupData g = group(gname);
        const TorusSpec w = torus(tname);
        const size_t generic = generic_h1_dim_along(g, w);
        for (int s = 0; s < 2; ++s) {
            const auto q = oracle::random_point_on(rng, w, 50, 100);
            c.equal(twisted_h1_dim(g, Character(g, q)), generic,
                    std::string(gname) + " on " + tname + " at " + show(q));
        }
    }
}

// 6. Rank drops on quasi-projective fixtures happen at torsion points only.
void torsion(Check& c) {
    const std::vector<std::pair<const char*, const char*>> cases{
        {"t2.grp", "t2-sub.trs"}, {"t2.grp", "t2-sub-neg.trs"}, {"f2.grp", "f2-sub.trs"},
        {"genus2.grp", "genus2-sub.trs"}, {"f8.grp", "gamma-sub.trs"}};
    for (const auto& [gname, tname] : cases) {
        const GroupData g = group(gname);
        c.expect(g.pres.quasi_projective, std::string(gname) + " flagged quasi-projective");
        const JumpReport r = jumping_points_1d(g, torus(tname));
        c.expect(!r.drops.non_torsion_factor.has_value(), std::string(gname) + " on " + tname + " has a non-torsion factor");
    }
    const VarList t = param_vars(1);
    const RankDropReport r = rank_drop_points(Matrix<CLaurent>(1, 1, to_cyclo(parse_laurent("t^2 - 1", t))));
    c.expect(r.points.size() == 2 && r.points[0].param == 0 && r.points[0].param_order == 1 &&
                 r.points[1].param == Rational(1, 2) && r.points[1].param_order == 2 && !r.non_torsion_factor,
             "[[t^2 - 1]] -> {t = 1 (order 1), t = -1 (order 2)}");
}

const char* kGroups[] = {"f2.grp", "t2.grp", "genus2.grp", "xy2.grp", "f8.grp"};

// 7. dim H^1 is invariant under inverting the character.
void symmetry(Check& c) {
    std::mt19937_64 rng(7);
    for (const char* name : kGroups) {
        const GroupData g = group(name);
        for (int t = 0; t < 100; ++t) {
            const Character rho(g, oracle::random_character(rng, g, 12, false));
            const auto s = symmetry_check(g, rho);
            c.expect(s.equal, std::string(name) + " at " + show(rho.q()));
        }
    }
}

// 8. twisted dim >= Aomoto dim for 1-formal groups.
void audit(Check& c) {
    std::mt19937_64 rng(8);
    const char* names[] = {"f2.grp", "t2.grp", "genus2.grp"};
    std::vector<GroupData> groups;
    for (const char* n : names) groups.push_back(group(n));
    int done = 0;
    while (done < 200) {
        const GroupData& g = groups[static_cast<size_t>(done % 3)];
        const Character rho(g, oracle::random_character(rng, g, 12, false));
        const auto lifts = exp_lift_candidates(g, rho, LiftBox{2});
        if (lifts.empty()) continue;
        const auto& alpha = lifts[std::uniform_int_distribution<size_t>(0, lifts.size() - 1)(rng)];
        const auto a = inequality_audit(g, rho, alpha);
        c.expect(a.holds && !a.diagnostic, g.pres.name + " at " + show(rho.q()) + " lift " + show(alpha));
        ++done;
    }
}

// 9. Free group characters are admissible with the trivial box.
void admissibility(Check& c) {
    std::mt19937_64 rng(9);
    const GroupData g = group("f2.grp");
    for (int t = 0; t < 50; ++t) {
        const Character rho(g, oracle::random_character(rng, g, 12, true));
        const auto r = is_admissible(g, rho, LiftBox{0});
        c.expect(r.admissible && r.lhs == 1 && r.lifts.size() == 1 && r.lifts[0].rhs == 1, "f2 at " + show(rho.q()));
    }
}

// 10. The eight-coordinate torus fixture and its st = -1 curve.
void gamma_fixture(Check& c) {
    const TorusSpec g = torus("gamma.trs"), sub = torus("gamma-sub.trs");
    c.expect(g.params == 2 && g.exponents == IntMatrix{{0, 1}, {1, 0}, {-2, -2}, {1, 0}, {0, 1}, {-1, -1}, {2, 0}, {-1, -1}},
             "gamma exponent matrix");
    c.expect(std::all_of(g.translate.begin(), g.translate.end(), [](const Rational& x) { return sgn(x) == 0; }),
             "gamma translate trivial");
    std::vector<std::string> names;
    for (int i = 1; i <= 8; ++i) names.push_back("x" + std::to_string(i));
    const VarList x = make_vars(names), st = make_vars({"s", "t"}), t = param_vars(1);
    // (s, t) -> (-1/t, t)
    const IntMatrix s_of_t{{-1}, {1}};
    const auto s_translate = to_roots({Rational(1, 2), Rational(0)});
    const std::vector<std::string> expected{"t", "-t^-1", "1", "-t^-1", "t", "-1", "t^-2", "-1"};
    for (size_t i = 0; i < 8; ++i) {
        const QLaurent xi = QLaurent::variable(x, i);
        const CLaurent on_gamma = substitute_monomial(xi, g.exponents, g.translate_roots(), st);
        const CLaurent restricted = substitute_monomial(on_gamma, s_of_t, s_translate, t);
        const CLaurent direct = substitute_monomial(xi, sub.exponents, sub.translate_roots(), t);
        c.expect(restricted == direct, "coordinate " + std::to_string(i + 1) + ": " + to_string(restricted) + " vs " + to_string(direct));
        c.expect(direct == to_cyclo(parse_laurent(expected[i], t)), "coordinate " + std::to_string(i + 1) + " reads " + to_string(direct));
    }
    const GroupData f8 = group("f8.grp");
    for (const TorusSpec* w : {&g, &sub}) {
        try {
            validate_spec(f8, *w);
        } catch (const Error& e) {
            c.expect(false, w->name + ": " + e.what());
        }
    }
    c.equal(character_order(sub.translate_roots()), 2UL, "order of the gamma-sub translate");
}

// 11. The Aomoto dimension depends only on the line through alpha.
void scale_invariance(Check& c) {
    std::mt19937_64 rng(11);
    for (const char* name : kGroups) {
        const GroupData g = group(name);
        for (int t = 0; t < 100; ++t) {
            const auto a = random_closed_form(rng, g.cup);
            Rational k = 0;
            while (sgn(k) == 0) k = oracle::random_rational(rng, 9, 7);
            std::vector<Rational> ka;
            for (const auto& v : a) ka.push_back(k * v);
            c.expect(aomoto_h1_dim(g.cup, OneForm(g.cup, ka)) == aomoto_h1_dim(g.cup, OneForm(g.cup, a)),
                     std::string(name) + " at " + show(a));
        }
    }
}

// 12. Resonant forms exponentiate into the characteristic variety.
void tangent_cone(Check& c) {
    std::mt19937_64 rng(12);
    for (const char* name : {"f2.grp", "genus2.grp"}) {
        const GroupData g = group(name);
        int done = 0, tries = 0;
        while (done < 50 && tries++ < 100000) {
            const auto alpha = oracle::random_nonzero_vector(rng, g.n());
            if (aomoto_h1_dim(g.cup, OneForm(g.cup, alpha)) < 1) continue;
            std::vector<Rational> q;
            for (const auto& a : alpha) q.push_back(mod_one(a));
            if (!validate_character(g.pres, q)) continue;
            const Character rho(g, q);
            if (rho.is_trivial()) continue;
            c.expect(charvar_membership(g, rho, 1), std::string(name) + " at alpha " + show(alpha));
            ++done;
        }
        c.equal(done, 50, std::string(name) + " samples");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"curve formulas and component dimensions", curves},
        {"Fox fundamental identity on 100 random words", fox_identity},
        {"Z^2: no positive-dimensional jumping", commutator_group},
        {"genus-2 surface group dimensions and cup form", genus_two},
        {"symbolic/pointwise coherence on shipped tori", coherence},
        {"torsion certification of rank drops", torsion},
        {"symmetry under character inversion", symmetry},
        {"inequality audit on 1-formal fixtures", audit},
        {"admissibility of free group characters at R = 0", admissibility},
        {"eight-coordinate torus fixture and its st = -1 curve", gamma_fixture},
        {"scale invariance of the Aomoto dimension", scale_invariance},
        {"tangent-cone sampling", tangent_cone}};
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = c.failures.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << ": " << criteria[i].first << " (" << std::fixed
                  << std::setprecision(2) << secs << " s)" << std::endl;
        for (const auto& f : c.failures) std::cout << "         " << f << "\n";
    }
    std::cout << criteria.size() - static_cast<size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
