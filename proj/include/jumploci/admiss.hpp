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

#ifndef JUMPLOCI_ADMISS_HPP
#define JUMPLOCI_ADMISS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charvar.hpp"
#include "error.hpp"
#include "ring.hpp"

namespace jumploci {

inline constexpr double kMaxLiftCandidates = 1e6;

/// Integer offsets z with |z_i| <= radius around the fractional lift.
struct LiftBox {
    unsigned radius = 2;
};

/// All lifts alpha = q + z (|z_i| <= R) with E alpha = 0, ordered by the
/// sup-norm of z and then lexicographically in z.
inline std::vector<std::vector<Rational>> exp_lift_candidates(const GroupData& g, const Character& rho, LiftBox box) {
    const size_t n = g.n();
    const long r = static_cast<long>(box.radius);
    if (std::pow(2.0 * r + 1.0, static_cast<double>(n)) > kMaxLiftCandidates)
        throw Error(ErrorKind::SizeLimit, "lift box of radius " + std::to_string(r) + " in " + std::to_string(n) +
                                              " coordinates exceeds the enumeration limit");
    std::vector<std::pair<long, std::vector<long>>> offsets;
    std::vector<long> z(n, -r);
    while (true) {
        long sup = 0;
        for (long v : z) sup = std::max(sup, std::labs(v));
        offsets.emplace_back(sup, z);
        size_t i = n;
        while (i > 0 && z[i - 1] == r) z[--i] = -r;
        if (i == 0) break;
        ++z[i - 1];
    }
    std::stable_sort(offsets.begin(), offsets.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::vector<Rational>> out;
    for (const auto& [sup, off] : offsets) {
        std::vector<Rational> alpha(n);
        for (size_t i = 0; i < n; ++i) alpha[i] = rho.q()[i] + Rational(off[i]);
        bool closed = true;
        for (size_t j = 0; j < g.exponents.rows() && closed; ++j) {
            Rational s = 0;
            for (size_t i = 0; i < n; ++i) s += Rational(g.exponents(j, i)) * alpha[i];
            closed = is_zero(s);
        }
        if (closed) out.push_back(std::move(alpha));
    }
    return out;
}

struct LiftDim {
    std::vector<Rational> alpha;
    size_t rhs;
};

struct AdmissibilityReport {
    std::vector<Rational> character;
    size_t lhs = 0;
    std::vector<LiftDim> lifts;
    bool admissible = false;
    std::optional<std::vector<Rational>> witness;
    bool formal_flag = false;
};

inline AdmissibilityReport is_admissible(const GroupData& g, const Character& rho, LiftBox box = {}) {
    AdmissibilityReport rep;
    rep.character = rho.q();
    rep.formal_flag = g.pres.formal;
    rep.lhs = twisted_h1_dim(g, rho);
    if (rho.is_trivial()) {
        // alpha = 0 always works for the trivial system
        std::vector<Rational> zero(g.n(), Rational(0));
        rep.lifts.push_back({zero, g.b1()});
        rep.admissible = true;
        rep.witness = zero;
        return rep;
    }
    for (auto& alpha : exp_lift_candidates(g, rho, box)) {
        const size_t rhs = aomoto_h1_dim(g.cup, OneForm(g.cup, alpha));
        if (!rep.admissible && rhs == rep.lhs) {
            rep.admissible = true;
            rep.witness = alpha;
        }
        rep.lifts.push_back({std::move(alpha), rhs});
    }
    return rep;
}

struct InequalityAudit {
    size_t lhs;
    size_t rhs;
    bool holds;
    std::optional<std::string> diagnostic;
};

inline InequalityAudit inequality_audit(const GroupData& g, const Character& rho, const std::vector<Rational>& alpha) {
    if (alpha.size() != g.n()) throw Error(ErrorKind::NotALift, "lift has the wrong number of coordinates");
    for (size_t i = 0; i < g.n(); ++i)
        if (mod_one(alpha[i]) != rho.q()[i])
            throw Error(ErrorKind::NotALift, "coordinate " + std::to_string(i) + " of alpha is not a lift of the character");
    const OneForm form(g.cup, alpha);
    InequalityAudit a{twisted_h1_dim(g, rho), aomoto_h1_dim(g.cup, form), false, std::nullopt};
    a.holds = a.lhs >= a.rhs;
    if (!a.holds && g.pres.formal)
        a.diagnostic = "FORMALITY-VIOLATION: twisted dimension " + std::to_string(a.lhs) +
                       " is below the Aomoto dimension " + std::to_string(a.rhs) + " for a group flagged 1-formal";
    return a;
}

/// First lift in the box whose Aomoto complex is acyclic in degree one.
/// Absence in a finite box is inconclusive.
inline std::optional<std::vector<Rational>> find_zero_lift(const GroupData& g, const Character& rho, LiftBox box = {}) {
    for (auto& alpha : exp_lift_candidates(g, rho, box))
        if (aomoto_h1_dim(g.cup, OneForm(g.cup, alpha)) == 0) return std::move(alpha);
    return std::nullopt;
}

struct GenericDimCriterion {
    size_t dim_at_rho;
    size_t generic_dim;
    bool matches;
};

inline GenericDimCriterion generic_dim_criterion(const GroupData& g, const Character& rho, const TorusSpec& w) {
    validate_spec(g, w);
    if (!on_torus(w, rho.q())) throw Error(ErrorKind::NotOnTorus, "character does not lie on torus '" + w.name + "'");
    const size_t here = twisted_h1_dim(g, rho);
    const size_t generic = generic_h1_dim_along(g, w);
    return {here, generic, here == generic};
}

}  // namespace jumploci

#endif
