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

// Command-line front end. Kept as a header so the test suites can drive
// run() directly with captured streams.
#ifndef JUMPLOCI_TOOLS_CLI_HPP
#define JUMPLOCI_TOOLS_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/jumploci.hpp"

namespace jumploci::cli {

using Json = nlohmann::ordered_json;

inline constexpr size_t kMaxGenerators = 16;
inline constexpr size_t kMaxRelators = 24;

enum ExitCode : int { kOk = 0, kInputError = 2, kSizeLimit = 3 };

struct Task {
    std::string command;
    std::string group_path;
    std::string torus_path;
    std::string chars_path;
    std::string character;
    std::string alpha;
    unsigned box = 2;
    std::optional<unsigned> k;
    unsigned genus = 0;
    unsigned punctures = 0;
    bool proper = false;
    std::string format = "table";
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Presentation load_presentation(const std::string& path) {
    if (path.empty()) throw Error(ErrorKind::ParseError, "--group is required");
    Presentation p;
    try {
        p = parse_presentation(read_file(path));
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
    if (p.num_generators() > kMaxGenerators)
        throw Error(ErrorKind::SizeLimit, std::to_string(p.num_generators()) + " generators (limit " +
                                              std::to_string(kMaxGenerators) + ")");
    if (p.num_relators() > kMaxRelators)
        throw Error(ErrorKind::SizeLimit, std::to_string(p.num_relators()) + " relators (limit " +
                                              std::to_string(kMaxRelators) + ")");
    return p;
}

inline TorusSpec load_torus(const std::string& path) {
    if (path.empty()) throw Error(ErrorKind::ParseError, "--torus is required");
    try {
        return parse_torus(read_file(path));
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

inline Json rationals_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

/// Characters named on the command line or listed one per line in --chars.
inline std::vector<std::string> character_inputs(const Task& t) {
    std::vector<std::string> out;
    if (!t.chars_path.empty()) {
        std::istringstream in(read_file(t.chars_path));
        std::string line;
        while (std::getline(in, line)) {
            line = line.substr(0, line.find('#'));
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out.push_back(line);
        }
    }
    if (!t.character.empty()) out.push_back(t.character);
    if (out.empty()) throw Error(ErrorKind::ParseError, "--char or --chars is required");
    return out;
}

inline Json jump_point_json(const JumpPoint& p) {
    Json j;
    j["param"] = to_string(p.param);
    j["param_order"] = p.param_order;
    j["character"] = rationals_json(p.character);
    j["character_order"] = p.character_order;
    j["h1"] = p.h1;
    j["trivial_character"] = p.trivial_character;
    return j;
}

inline Json admissibility_json(const AdmissibilityReport& r) {
    Json j;
    j["character"] = rationals_json(r.character);
    j["formal_flag"] = r.formal_flag;
    j["lhs"] = r.lhs;
    Json lifts = Json::array();
    for (const auto& l : r.lifts) lifts.push_back(Json{{"alpha", rationals_json(l.alpha)}, {"rhs", l.rhs}});
    j["lifts"] = lifts;
    j["admissible"] = r.admissible;
    j["witness"] = r.witness ? rationals_json(*r.witness) : Json(nullptr);
    return j;
}

// Per-character work for the batch-capable commands.
inline Json character_query(const Task& t, const GroupData& g, const std::string& text) {
    const Character rho(g, parse_rational_list(text));
    Json j;
    j["character"] = rationals_json(rho.q());
    if (t.command == "twisted") {
        j["order"] = rho.order();
        j["h0"] = twisted_h0_dim(g, rho);
        const size_t h1 = twisted_h1_dim(g, rho);
        j["h1"] = h1;
        if (t.k) j["member"] = h1 >= *t.k;
    } else if (t.command == "symmetry") {
        const auto s = symmetry_check(g, rho);
        j["inverse"] = rationals_json(rho.inverse_q());
        j["dim_at_rho"] = s.dim_at_rho;
        j["dim_at_inverse"] = s.dim_at_inverse;
        j["equal"] = s.equal;
    } else if (t.command == "admissible") {
        j = admissibility_json(is_admissible(g, rho, LiftBox{t.box}));
    } else if (t.command == "lifts") {
        j["box"] = t.box;
        Json lifts = Json::array();
        for (const auto& a : exp_lift_candidates(g, rho, LiftBox{t.box})) lifts.push_back(rationals_json(a));
        j["lifts"] = lifts;
    } else if (t.command == "zero-lift") {
        j["box"] = t.box;
        const auto z = find_zero_lift(g, rho, LiftBox{t.box});
        j["zero_lift"] = z ? rationals_json(*z) : Json(nullptr);
        j["status"] = z ? "found" : "none-in-box";
    } else if (t.command == "audit") {
        const auto a = inequality_audit(g, rho, parse_rational_list(t.alpha));
        j["alpha"] = rationals_json(parse_rational_list(t.alpha));
        j["lhs"] = a.lhs;
        j["rhs"] = a.rhs;
        j["holds"] = a.holds;
        j["formal_flag"] = g.pres.formal;
        j["diagnostic"] = a.diagnostic ? Json(*a.diagnostic) : Json(nullptr);
    } else if (t.command == "criterion") {
        const auto c = generic_dim_criterion(g, rho, load_torus(t.torus_path));
        j["dim_at_rho"] = c.dim_at_rho;
        j["generic_dim"] = c.generic_dim;
        j["matches"] = c.matches;
    }
    return j;
}

inline Json execute(const Task& t) {
    Json out;
    out["command"] = t.command;
    if (t.command == "curve") {
        if (t.proper && t.punctures != 0) throw Error(ErrorKind::ParseError, "--proper conflicts with --punctures > 0");
        const CurveDescriptor s{t.genus, t.punctures};
        out["genus"] = s.genus;
        out["punctures"] = s.punctures;
        out["proper"] = s.proper();
        out["euler_characteristic"] = s.euler_characteristic();
        out["b1"] = s.b1();
        out["h1_trivial"] = curve_h1_dim(s, true);
        out["h1_nontrivial"] = s.b1() > 0 ? Json(curve_h1_dim(s, false)) : Json(nullptr);
        try {
            const auto d = component_dims(s);
            out["dim_component"] = d.dim_component;
            out["generic_dim"] = d.generic_dim;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateCurve) throw;
            out["dim_component"] = nullptr;
            out["generic_dim"] = nullptr;
        }
        return out;
    }

    const GroupData g(load_presentation(t.group_path));
    out["group"] = g.pres.name;
    if (t.command == "aomoto") {
        const auto alpha = parse_rational_list(t.alpha);
        const size_t d = aomoto_h1_dim(g.cup, OneForm(g.cup, alpha));
        out["alpha"] = rationals_json(alpha);
        out["ring_model"] = kRingModel;
        out["h1"] = d;
        if (t.k) out["resonant"] = d >= *t.k;
        return out;
    }
    if (t.command == "generic") {
        const TorusSpec w = load_torus(t.torus_path);
        out["torus"] = w.name;
        out["params"] = w.params;
        out["generic_h1"] = generic_h1_dim_along(g, w);
        return out;
    }
    if (t.command == "jump") {
        const TorusSpec w = load_torus(t.torus_path);
        const JumpReport r = jumping_points_1d(g, w);
        out["torus"] = w.name;
        out["generic_rank"] = r.drops.generic_rank;
        out["generic_h1"] = r.generic_dim;
        out["minor_gcd"] = poly_to_string(r.drops.minor_gcd);
        out["norm"] = poly_to_string(r.drops.norm);
        Json cyc = Json::array();
        for (const auto& [n, m] : r.drops.cyclotomic.factors) cyc.push_back(Json{{"n", n}, {"multiplicity", m}});
        out["cyclotomic_factors"] = cyc;
        Json pts = Json::array();
        for (const auto& p : r.torsion_points) pts.push_back(jump_point_json(p));
        out["torsion_points"] = pts;
        out["non_torsion_factor"] = r.drops.non_torsion_factor ? Json(poly_to_string(*r.drops.non_torsion_factor)) : Json(nullptr);
        Json triv = Json::array();
        for (const auto& p : r.trivial_char_params) triv.push_back(jump_point_json(p));
        out["trivial_char_params"] = triv;
        out["quasi_projective_flag"] = g.pres.quasi_projective;
        return out;
    }

    // Commands keyed by characters; batch input is evaluated concurrently
    // and reassembled in input order.
    const auto inputs = character_inputs(t);
    if (inputs.size() == 1 && t.chars_path.empty()) {
        const Json single = character_query(t, g, inputs[0]);
        for (const auto& [key, val] : single.items()) out[key] = val;
        return out;
    }
    std::vector<std::future<Json>> jobs;
    for (const auto& s : inputs) jobs.push_back(std::async(std::launch::async, [&t, &g, s] { return character_query(t, g, s); }));
    Json results = Json::array();
    for (auto& j : jobs) results.push_back(j.get());
    out["results"] = results;
    return out;
}

inline std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void render_table(const Json& j, std::ostream& out) {
    size_t width = 0;
    for (auto& [key, val] : j.items())
        if (key != "results") width = std::max(width, key.size());
    for (auto& [key, val] : j.items()) {
        if (key == "results") continue;
        out << key << std::string(width - key.size() + 2, ' ') << scalar_text(val) << "\n";
    }
    if (j.contains("results"))
        for (const auto& r : j["results"]) {
            out << "\n";
            render_table(r, out);
        }
}

inline const std::vector<std::pair<std::string, std::string>>& commands() {
    static const std::vector<std::pair<std::string, std::string>> c{
        {"twisted", "twisted cohomology dimensions at a torsion character"},
        {"aomoto", "Aomoto complex H^1 dimension at a rational one-form"},
        {"generic", "generic H^1 dimension along a torus"},
        {"jump", "rank-drop points along a one-parameter torus"},
        {"admissible", "admissibility report from lifts in a box"},
        {"symmetry", "compare H^1 at a character and its inverse"},
        {"curve", "cohomology of a smooth curve of given genus and punctures"},
        {"lifts", "rational lifts of a character in a box"},
        {"audit", "inequality audit for a character and a lift"},
        {"zero-lift", "search the box for a lift with vanishing Aomoto H^1"},
        {"criterion", "compare H^1 at a character with the generic value on a torus"},
    };
    return c;
}

/// Parses argv-style arguments (without the program name), runs the task and
/// writes the result to out. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jumping loci of rank one local systems from group presentations", "jumploci"};
    app.require_subcommand(1);
    Task t;
    for (const auto& [name, help] : commands()) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--group", t.group_path, "presentation file");
        sub->add_option("--torus", t.torus_path, "torus spec file");
        sub->add_option("--char", t.character, "character as comma-separated rationals");
        sub->add_option("--chars", t.chars_path, "file with one character per line");
        sub->add_option("--alpha", t.alpha, "one-form as comma-separated rationals");
        sub->add_option("--box", t.box, "lift box radius");
        sub->add_option("--k", t.k, "threshold for membership queries");
        sub->add_option("--genus", t.genus, "curve genus");
        sub->add_option("--punctures", t.punctures, "number of punctures");
        sub->add_flag("--proper", t.proper, "curve is proper (no punctures)");
        sub->add_option("--format", t.format, "output format")->check(CLI::IsMember({"json", "table"}));
        sub->callback([&t, sub] { t.command = sub->get_name(); });
    }
    std::vector<std::string> argv_store{"jumploci"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    try {
        const Json result = execute(t);
        if (t.format == "json") out << result.dump(2) << "\n";
        else render_table(result, out);
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::SizeLimit ? kSizeLimit : kInputError;
    }
}

}  // namespace jumploci::cli

#endif
