#include "property_suites.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace wrightcheck;

#ifndef WRIGHTCHECK_SCENARIO_DIR
#define WRIGHTCHECK_SCENARIO_DIR "scenarios"
#endif

namespace {

const Claim& claim(const Report& r, const std::string& label) {
    for (const auto& c : r.claims)
        if (c.label == label) return c;
    throw std::out_of_range("no claim labelled '" + label + "' in " + r.scenario);
}

Value rat(long long v) { return Value(std::in_place_type<Rational>, Rational(v)); }

std::string scenario_file(const std::string& name) { return std::string(WRIGHTCHECK_SCENARIO_DIR) + "/" + name; }

}  // namespace

TEST(Theorem23, OddOrdersGiveMinusOne) {
    for (unsigned n : {1u, 3u, 5u}) {
        const auto r = verify_theorem_2_3(n);
        EXPECT_TRUE(r.pass()) << "n=" << n;
        EXPECT_EQ(r.claims.front().computed, rat(-1));
    }
}

TEST(Theorem23, EvenOrderIsRejected) {
    EXPECT_THROW(verify_theorem_2_3(2), EvenOrder);
    EXPECT_THROW(verify_lemma_4_4(4), EvenOrder);
    EXPECT_THROW(verify_lemma_4_6(0), EvenOrder);
}

TEST(Section31, PrintedTable) {
    const auto r = verify_section_3_1();
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(claim(r, "f(0 + h1 + h2 + h3 + h4)").computed, rat(8));
    EXPECT_EQ(claim(r, "f(0 + h1 + h2)").computed, rat(0));
    EXPECT_EQ(claim(r, "f(0 + h1 + h3)").computed, rat(0));
    EXPECT_EQ(claim(r, "f(0 + h1 + h4)").computed, rat(0));
    ASSERT_TRUE(r.trace.has_value());
    EXPECT_EQ(r.trace->rows.size(), 16u);
    std::ostringstream os;
    render_human(os, r, true);
    EXPECT_NE(os.str().find("8 - 30 + 24 - 3 + 0 = -1"), std::string::npos);
}

TEST(Section32, AllSubClaims) {
    const auto r = verify_section_3_2();
    for (const auto& c : r.claims) EXPECT_TRUE(c.pass()) << c.label;
    bool saw_minus_18 = false, saw_minus_4 = false;
    for (const auto& c : r.claims) {
        saw_minus_18 = saw_minus_18 || (c.expected && *c.expected == rat(-18));
        saw_minus_4 = saw_minus_4 || (c.expected && *c.expected == rat(-4));
    }
    EXPECT_TRUE(saw_minus_18);
    EXPECT_TRUE(saw_minus_4);
}

TEST(Lemma44, SmallOrders) {
    for (unsigned n : {1u, 3u, 5u}) EXPECT_TRUE(verify_lemma_4_4(n).pass()) << "n=" << n;
    const auto r = verify_lemma_4_4(3);
    EXPECT_EQ(claim(r, "(d) mu(h1)").computed, rat(-1));
}

TEST(Lemma46, SmallOrdersAndChainAgreement) {
    for (unsigned n : {1u, 3u, 5u}) {
        const auto lemma = verify_lemma_4_6(n);
        EXPECT_TRUE(lemma.pass()) << "n=" << n;
        const auto theorem = verify_theorem_2_3(n);
        EXPECT_EQ(theorem.claims.front().computed, rat(-1));
        for (const auto& c : lemma.claims) {
            if (c.label.find("measure path") != std::string::npos) {
                EXPECT_EQ(c.computed, theorem.claims.front().computed) << c.label;
            }
        }
    }
}

TEST(Prop43, DeterministicForASeed) {
    const auto a = verify_prop_4_3(25, 42);
    const auto b = verify_prop_4_3(25, 42);
    ASSERT_EQ(a.claims.size(), b.claims.size());
    for (std::size_t i = 0; i < a.claims.size(); ++i) {
        EXPECT_EQ(a.claims[i].computed, b.claims[i].computed);
        EXPECT_EQ(a.claims[i].pass(), b.claims[i].pass());
    }
    EXPECT_TRUE(a.pass());
    EXPECT_THROW(verify_prop_4_3(0, 1), std::invalid_argument);
}

TEST(ProbeEven, DocumentedCandidates) {
    const auto w31 = probe_even(2, "prop31-witness");
    EXPECT_TRUE(w31.pass());
    EXPECT_EQ(claim(w31, "violation value").computed, rat(-1));
    const auto w33 = probe_even(2, "prop33-witness");
    EXPECT_TRUE(w33.pass());
    EXPECT_EQ(claim(w33, "violation value").computed, rat(-1));
    const auto grid = probe_even(2, "prop32-grid");
    EXPECT_TRUE(grid.pass());
    EXPECT_EQ(claim(grid, "Jensen violations on grid").computed, rat(0));
    EXPECT_THROW(probe_even(2, "nope"), UnknownCandidate);
    EXPECT_THROW(probe_even(3, "prop31-witness"), std::invalid_argument);
}

TEST(Report, RenderedFormats) {
    Report r;
    r.scenario = "demo";
    r.parameters = {{"n", "3"}};
    r.add("half", "x", Value(std::in_place_type<Rational>, make_rational(1, 2)),
          Value(std::in_place_type<Rational>, make_rational(1, 2)));
    r.add("flag", "", Value(std::in_place_type<bool>, false), Value(std::in_place_type<bool>, true));
    r.add("note", "", Value(std::in_place_type<std::string>, "{h1}"), std::nullopt);
    EXPECT_FALSE(r.pass());
    EXPECT_EQ(r.failures(), 1u);

    std::ostringstream tsv;
    render_tsv(tsv, r);
    EXPECT_EQ(tsv.str(), "demo n=3\thalf\t1/2\t1/2\tpass\ndemo n=3\tflag\tfalse\ttrue\tfail\ndemo n=3\tnote\t{h1}\t-\tpass\n");

    std::ostringstream jsonl;
    render_jsonl(jsonl, r, false);
    std::istringstream lines(jsonl.str());
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j.at("scenario"), "demo n=3");
        ++count;
    }
    EXPECT_EQ(count, 3u);
    EXPECT_EQ(nlohmann::json::parse(jsonl.str().substr(0, jsonl.str().find('\n'))).at("computed"), "1/2");
}

TEST(DefinitionFile, TheoremScenarioForNThree) {
    const auto r = run_definition_file(scenario_file("theorem23_n3.def"));
    EXPECT_TRUE(r.pass());
    bool found = false;
    for (const auto& c : r.claims)
        if (c.label.find("forward-diff at 0") != std::string::npos) {
            EXPECT_EQ(c.computed, rat(-1));
            found = true;
        }
    EXPECT_TRUE(found);
}

TEST(DefinitionFile, ModulusAndClosures) {
    EXPECT_TRUE(run_definition_file(scenario_file("modulus.def")).pass());
    EXPECT_TRUE(run_definition_file(scenario_file("closures.def")).pass());
}

TEST(DefinitionFile, UndeclaredSymbol) {
    EXPECT_THROW(run_definition_file(scenario_file("undeclared_symbol.def")), UnknownSymbol);
}

TEST(DefinitionFile, ZeroIncrement) {
    EXPECT_THROW(run_definition_file(scenario_file("zero_increment.def")), InvalidIncrement);
}

TEST(DefinitionFile, NegativeIncrement) {
    EXPECT_THROW(run_definition_string("symbol h positive\nadditive h = 1\nfunction identity of a\n"
                                       "eval forward-diff at 0 with [-1*h]\n"),
                 InvalidIncrement);
}

TEST(DefinitionFile, ParseErrorsCarryPosition) {
    try {
        run_definition_string("symbol h positive\n\nadditive h = 1/0\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 14u);
    }
    try {
        run_definition_string("frobnicate\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 1u);
    }
    EXPECT_THROW(run_definition_string("symbol h\nfunction abs tabulated { h : 1,\n"), ParseError);
    EXPECT_THROW(run_definition_string("symbol h\neval value at h\n"), ParseError);
    EXPECT_THROW(run_definition_string("symbol h positive\nsymbol h\n"), ParseError);
    EXPECT_THROW(run_definition_file("/nonexistent/file.def"), Error);
}

TEST(DefinitionFile, NamedFunctionalsAndExpectations) {
    const auto r = run_definition_string(
        "symbol s positive\nsymbol t positive\n"
        "additive b(s) = 1\nadditive b(t) = -2\n"
        "function pospartpow 2 of b\n"
        "eval jensen-probe n=2 grid=0:1 expect 1\n"
        "eval value at s + t expect 0\n"
        "eval value at 3/2*s expect 9/4\n");
    EXPECT_TRUE(r.pass()) << to_string(r.claims.front().computed);
    const auto bad = run_definition_string("symbol s positive\nadditive s = 1\nfunction identity of a\n"
                                           "eval value at s expect 2\n");
    EXPECT_FALSE(bad.pass());
}
