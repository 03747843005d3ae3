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

#include <random>

#include "oracles.hpp"

using namespace jumploci;

namespace {

const std::vector<std::string> kGens{"x", "y"};
const VarList kXY = make_vars(kGens);

QLaurent P(const std::string& s) { return parse_laurent(s, kXY); }

ErrorKind kind_of(const std::string& text) {
    try {
        parse_presentation(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::SpecMismatch;  // sentinel: no error
}

// Sum over group elements, abelianized, of a group ring element.
QLaurent abelianize(const oracle::GroupRing& r, const VarList& v) {
    QLaurent out(v);
    for (const auto& [w, c] : r) out.add_term(w.abelianize(v->size()), Rational(c));
    return out;
}

}  // namespace

TEST(Word, FreeReduction) {
    const Word w = parse_word("x y y^-1 x^2", kGens);
    EXPECT_EQ(w, parse_word("x^3", kGens));
    EXPECT_TRUE((w * w.inverse()).empty());
    EXPECT_EQ(word_to_string(commutator(generator_word(0), generator_word(1)), kGens), "x y x^-1 y^-1");
    EXPECT_EQ(word_to_string(Word(), kGens), "1");
}

TEST(Fox, Examples) {
    const Word c = commutator(generator_word(0), generator_word(1));
    EXPECT_EQ(fox_derivative(c, 0, kXY), P("1 - y"));
    EXPECT_EQ(fox_derivative(c, 1, kXY), P("x - 1"));
    EXPECT_EQ(fox_derivative(parse_word("x^3", kGens), 0, kXY), P("1 + x + x^2"));
    EXPECT_EQ(fox_derivative(parse_word("x^-2", kGens), 0, kXY), P("-x^-1 - x^-2"));
    EXPECT_EQ(fox_derivative(parse_word("x y^2 x^-1 y^-2", kGens), 1, kXY), P("x + x*y - 1 - y"));
    EXPECT_THROW(fox_derivative(c, 2, kXY), Error);
}

TEST(Fox, CommutatorAlexanderMatrix) {
    const Presentation t2 = parse_presentation(oracle::read_data("t2.grp"));
    const Matrix<QLaurent> j = alexander_matrix(t2);
    ASSERT_EQ(j.rows(), 1u);
    ASSERT_EQ(j.cols(), 2u);
    EXPECT_EQ(j(0, 0), P("1 - y"));
    EXPECT_EQ(j(0, 1), P("x - 1"));
}

TEST(Fox, FundamentalIdentity) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const size_t n = 1 + t % 4;
        std::vector<std::string> names;
        for (size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        const VarList v = make_vars(names);
        const Word w = oracle::random_word(rng, n, 30);
        QLaurent lhs(v);
        for (size_t i = 0; i < n; ++i)
            lhs += fox_derivative(w, i, v) * (QLaurent::variable(v, i) - QLaurent::constant(v, Rational(1)));
        const QLaurent rhs = QLaurent::monomial(v, w.abelianize(n)) - QLaurent::constant(v, Rational(1));
        EXPECT_EQ(lhs, rhs) << word_to_string(w, names);
        // agreement with the group-ring derivative
        for (size_t i = 0; i < n; ++i) EXPECT_EQ(fox_derivative(w, i, v), abelianize(oracle::fox_noncommutative(w, i), v));
    }
}

TEST(Fox, FreeReductionInvariance) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        const Word a = oracle::random_word(rng, 2, 10), b = oracle::random_word(rng, 2, 10), u = oracle::random_word(rng, 2, 5);
        const Word padded = a * u * u.inverse() * b;  // reduces to a b
        for (size_t i = 0; i < 2; ++i) EXPECT_EQ(fox_derivative(padded, i, kXY), fox_derivative(a * b, i, kXY));
    }
}

TEST(Fox, ExponentMatrixAndBetti) {
    const Presentation g = parse_presentation(oracle::read_data("genus2.grp"));
    EXPECT_EQ(exponent_matrix(g), IntMatrix(1, 4, 0));
    EXPECT_EQ(first_betti(g), 4u);
    const Presentation p = parse_presentation("group P\ngens x y\nrel x^2 y^-3\n");
    EXPECT_EQ(exponent_matrix(p), (IntMatrix{{2, -3}}));
    EXPECT_EQ(first_betti(p), 1u);
    EXPECT_EQ(first_betti(parse_presentation(oracle::read_data("f8.grp"))), 8u);
}

TEST(Fox, RedundantRelatorLeavesBettiAndRankUnchanged) {
    const Presentation p = parse_presentation("group P\ngens x y\nrel x y x^-1 y^-1\n");
    Presentation q = p;
    q.relators.push_back(q.relators[0] * q.relators[0]);
    EXPECT_EQ(first_betti(p), first_betti(q));
    EXPECT_EQ(generic_rank(alexander_matrix(p)), generic_rank(alexander_matrix(q)));
}

TEST(Fox, ValidateCharacter) {
    const Presentation p = parse_presentation("group P\ngens x y\nrel x^2 y^-3\n");
    EXPECT_TRUE(validate_character(p, {Rational(1, 2), Rational(0)}));
    EXPECT_TRUE(validate_character(p, {Rational(0), Rational(1, 3)}));
    EXPECT_TRUE(validate_character(p, {Rational(1, 4), Rational(1, 6)}));
    EXPECT_FALSE(validate_character(p, {Rational(1, 3), Rational(0)}));
    EXPECT_FALSE(validate_character(p, {Rational(0)}));
}

TEST(PresentationFile, RoundTrip) {
    for (const char* name : {"f2.grp", "t2.grp", "genus2.grp", "f8.grp", "xy2.grp"}) {
        const Presentation p = parse_presentation(oracle::read_data(name));
        EXPECT_EQ(parse_presentation(emit_presentation(p)), p) << name;
        EXPECT_EQ(emit_presentation(parse_presentation(emit_presentation(p))), emit_presentation(p));
    }
    const Presentation t = parse_presentation("group T # c\n\ngens a b\nrel 1\nrel a b^-2\n");
    EXPECT_EQ(t.relators.size(), 2u);
    EXPECT_TRUE(t.relators[0].empty());
    EXPECT_FALSE(t.formal);
}

TEST(PresentationFile, Errors) {
    EXPECT_EQ(kind_of("gens x\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("group G\n"), ErrorKind::EmptyGeneratorList);
    EXPECT_EQ(kind_of("group G\ngens\n"), ErrorKind::EmptyGeneratorList);
    EXPECT_EQ(kind_of("group G\ngens x\nrel z\n"), ErrorKind::UnknownGenerator);
    EXPECT_EQ(kind_of("group G\ngens x\nrel x^a\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("group G\ngens x x\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("group G\ngens x\nrel\n"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of("group G\ngens x\nbogus\n"), ErrorKind::ParseError);
    try {
        parse_presentation("group G\ngens x\nrel x x^q\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 3, column 9"), std::string::npos) << e.what();
    }
}
