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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "oracles.hpp"

using namespace jumploci;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    cli::Json json() const { return cli::Json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return oracle::data_path(name); }

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("jumploci_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(Cli, Twisted) {
    const Result r = run({"twisted", "--group", data("f2.grp"), "--char", "1/2,1/3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["h0"], 0);
    EXPECT_EQ(j["h1"], 1);
    EXPECT_EQ(j["character"], cli::Json::array({"1/2", "1/3"}));
    EXPECT_EQ(j["order"], 6);
    const Result m = run({"twisted", "--group", data("t2.grp"), "--char", "1/2,1/2", "--k", "1", "--format", "json"});
    EXPECT_EQ(m.json()["member"], false);
}

TEST(Cli, TableFormat) {
    const Result r = run({"twisted", "--group", data("f2.grp"), "--char", "1/2,1/3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("h1"), std::string::npos);
    EXPECT_NE(r.out.find("1/2"), std::string::npos);
}

TEST(Cli, Curve) {
    auto j = run({"curve", "--genus", "1", "--punctures", "1", "--format", "json"}).json();
    EXPECT_EQ(j["dim_component"], 2);
    EXPECT_EQ(j["generic_dim"], 1);
    EXPECT_EQ(j["h1_nontrivial"], 1);
    j = run({"curve", "--genus", "2", "--proper", "--format", "json"}).json();
    EXPECT_EQ(j["dim_component"], 4);
    EXPECT_EQ(j["generic_dim"], 2);
    j = run({"curve", "--genus", "0", "--format", "json"}).json();
    EXPECT_TRUE(j["dim_component"].is_null());
    EXPECT_TRUE(j["h1_nontrivial"].is_null());
    EXPECT_EQ(run({"curve", "--genus", "1", "--punctures", "2", "--proper"}).code, 2);
}

TEST(Cli, AomotoGenericJump) {
    auto j = run({"aomoto", "--group", data("genus2.grp"), "--alpha", "1,0,0,2", "--format", "json"}).json();
    EXPECT_EQ(j["h1"], 2);
    j = run({"generic", "--group", data("genus2.grp"), "--torus", data("genus2-full.trs"), "--format", "json"}).json();
    EXPECT_EQ(j["generic_h1"], 2);
    j = run({"jump", "--group", data("t2.grp"), "--torus", data("t2-sub.trs"), "--format", "json"}).json();
    EXPECT_EQ(j["generic_h1"], 0);
    ASSERT_EQ(j["torsion_points"].size(), 1u);
    EXPECT_EQ(j["torsion_points"][0]["param"], "0");
    EXPECT_EQ(j["torsion_points"][0]["trivial_character"], true);
    EXPECT_TRUE(j["non_torsion_factor"].is_null());
    EXPECT_EQ(j["minor_gcd"], "-1 + t");
}

TEST(Cli, CharacterCommands) {
    auto j = run({"admissible", "--group", data("genus2.grp"), "--char", "1/3,0,0,0", "--box", "0", "--format", "json"}).json();
    EXPECT_EQ(j["lhs"], 2);
    EXPECT_EQ(j["admissible"], true);
    EXPECT_EQ(j["witness"], cli::Json::array({"1/3", "0", "0", "0"}));
    j = run({"symmetry", "--group", data("genus2.grp"), "--char", "1/3,0,0,0", "--format", "json"}).json();
    EXPECT_EQ(j["inverse"], cli::Json::array({"2/3", "0", "0", "0"}));
    EXPECT_EQ(j["equal"], true);
    j = run({"lifts", "--group", data("f2.grp"), "--char", "1/2,1/3", "--box", "1", "--format", "json"}).json();
    EXPECT_EQ(j["lifts"].size(), 9u);
    j = run({"zero-lift", "--group", data("f2.grp"), "--char", "1/2,0", "--format", "json"}).json();
    EXPECT_EQ(j["status"], "none-in-box");
    j = run({"audit", "--group", data("f2.grp"), "--char", "1/2,0", "--alpha", "1/2,0", "--format", "json"}).json();
    EXPECT_EQ(j["holds"], true);
    EXPECT_TRUE(j["diagnostic"].is_null());
    j = run({"criterion", "--group", data("f2.grp"), "--char", "0,0", "--torus", data("f2-full.trs"), "--format", "json"}).json();
    EXPECT_EQ(j["matches"], false);
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"twisted", "--group", data("f2.grp")}).code, 2);
    EXPECT_EQ(run({"twisted", "--group", data("f2.grp"), "--char", "1/2"}).code, 2);
    EXPECT_EQ(run({"twisted", "--group", data("f2.grp"), "--char", "1/0,0"}).code, 2);
    EXPECT_EQ(run({"twisted", "--group", "/nonexistent.grp", "--char", "0,0"}).code, 2);
    EXPECT_EQ(run({"twisted", "--group", data("f2.grp"), "--char", "0,0", "--format", "xml"}).code, 2);
    const std::string bad = temp_file("bad.grp", "group B\ngens x y\nrel x z\n");
    const Result r = run({"twisted", "--group", bad, "--char", "0,0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unknown generator"), std::string::npos) << r.err;
    EXPECT_EQ(run({"generic", "--group", data("t2.grp"), "--torus", data("gamma.trs")}).code, 2);
    EXPECT_EQ(run({"audit", "--group", data("f2.grp"), "--char", "1/2,0", "--alpha", "1/3,0"}).code, 2);
    EXPECT_EQ(run({"criterion", "--group", data("t2.grp"), "--char", "0,1/2", "--torus", data("t2-sub.trs")}).code, 2);
}

TEST(Cli, SizeLimitsExitThree) {
    std::string big = "group Big\ngens";
    for (int i = 0; i < 17; ++i) big += " g" + std::to_string(i);
    const std::string path = temp_file("big.grp", big + "\n");
    std::string zero = "0";
    for (int i = 1; i < 17; ++i) zero += ",0";
    EXPECT_EQ(run({"twisted", "--group", path, "--char", zero}).code, 3);
    EXPECT_EQ(run({"lifts", "--group", data("f8.grp"), "--char", "0,0,0,0,0,0,0,0", "--box", "5"}).code, 3);
}

TEST(Cli, DeterministicOutput) {
    const std::vector<std::vector<std::string>> cases{
        {"jump", "--group", data("xy2.grp"), "--torus", data("xy2-sub-y.trs"), "--format", "json"},
        {"admissible", "--group", data("t2.grp"), "--char", "1/2,1/3", "--box", "1", "--format", "json"},
        {"generic", "--group", data("f8.grp"), "--torus", data("gamma.trs"), "--format", "json"}};
    for (const auto& c : cases) {
        const Result a = run(c), b = run(c);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, BatchKeepsInputOrder) {
    std::string lines = "# characters\n";
    std::vector<std::string> chars;
    for (int k = 1; k <= 24; ++k) {
        chars.push_back("1/" + std::to_string(k + 1) + ",0");
        lines += chars.back() + "\n";
    }
    const std::string path = temp_file("chars.txt", lines);
    const Result r = run({"twisted", "--group", data("f2.grp"), "--chars", path, "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto results = r.json()["results"];
    ASSERT_EQ(results.size(), chars.size());
    for (size_t i = 0; i < chars.size(); ++i) {
        EXPECT_EQ(results[i]["character"][0], "1/" + std::to_string(i + 2));
        EXPECT_EQ(results[i]["h1"], 1);
    }
    const std::string bad = temp_file("chars_bad.txt", "1/2,0\n1/3\n");
    EXPECT_EQ(run({"twisted", "--group", data("f2.grp"), "--chars", bad}).code, 2);
}

TEST(Cli, ShippedFilesRoundTrip) {
    for (const auto& entry : std::filesystem::directory_iterator(JUMPLOCI_DATA_DIR)) {
        const std::string text = oracle::read_data(entry.path().filename().string());
        if (entry.path().extension() == ".grp") {
            const Presentation p = parse_presentation(text);
            EXPECT_EQ(parse_presentation(emit_presentation(p)), p) << entry.path();
        } else if (entry.path().extension() == ".trs") {
            const TorusSpec w = parse_torus(text);
            EXPECT_EQ(parse_torus(emit_torus(w)), w) << entry.path();
        }
    }
}
