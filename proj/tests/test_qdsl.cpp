/*
   Copyright 2026 The qcatalan Authors

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
#include <sstream>

#include "oracles.hpp"
#include "qcatalan/qdsl.hpp"
#include "qcatalan/rootid.hpp"

namespace dsl = qcat::dsl;
using qcat::CycloElem;
using qcat::Poly;
using qcat::Rational;

namespace {

Poly poly(const std::string& text, const dsl::Bindings& b = {}) { return dsl::eval_poly(dsl::parse(text), b); }

/// Random division-free expression with nonnegative q-exponents.
std::string random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 3);
    std::uniform_int_distribution<int> small(0, 4);
    switch (pick(rng)) {
        case 0: return std::to_string(small(rng) - 2);
        case 1: return "q^" + std::to_string(small(rng));
        case 2: return "qcat(" + std::to_string(small(rng)) + ")";
        case 3: return "qbin(n, " + std::to_string(small(rng)) + ")";
        case 4: return "(" + random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1) + ")";
        case 5: return "(" + random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1) + ")";
        case 6: return "(" + random_expr(rng, depth - 1) + ") * (" + random_expr(rng, depth - 1) + ")";
        default: return "sum(k=0..n, q^(k*n) * " + random_expr(rng, depth - 1) + ")";
    }
}

/// p(zeta_m^j) computed term by term.
CycloElem at_root(const Poly& p, std::int64_t m, std::int64_t j) {
    auto field = qcat::make_field(m);
    CycloElem out(field, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) out += CycloElem::root_power(field, static_cast<std::int64_t>(i) * j) * p[i];
    return out;
}

}  // namespace

TEST(Parse, Examples) {
    auto e = dsl::parse("qbin(4,2)");
    EXPECT_EQ(e->kind, dsl::NodeKind::qbin);
    ASSERT_EQ(e->args.size(), 2u);
    EXPECT_EQ(e->args[0]->value, Rational(4));
    auto s = dsl::parse("sum(k=0..n-1, q^k * qcat(k))");
    EXPECT_EQ(s->kind, dsl::NodeKind::sum);
    EXPECT_EQ(s->name, "k");
    EXPECT_EQ(s->args[2]->kind, dsl::NodeKind::mul);
}

TEST(Parse, Precedence) {
    EXPECT_TRUE(dsl::same_structure(dsl::parse("-q^2"), dsl::parse("-(q^2)")));
    EXPECT_TRUE(dsl::same_structure(dsl::parse("1 + 2*q/3"), dsl::parse("1 + ((2*q)/3)")));
    EXPECT_TRUE(dsl::same_structure(dsl::parse("1 - q - q^2"), dsl::parse("(1 - q) - q^2")));
    EXPECT_EQ(poly("2^3^2"), Poly::constant(512));
}

TEST(Parse, ErrorsCarryPosition) {
    try {
        dsl::parse("q^^2");
        FAIL() << "expected a syntax error";
    } catch (const dsl::ParseError& err) {
        EXPECT_EQ(err.line(), 1);
        EXPECT_EQ(err.column(), 3);
        EXPECT_FALSE(err.expected().empty());
    }
    EXPECT_THROW(dsl::parse("sum(k="), dsl::ParseError);
    EXPECT_THROW(dsl::parse("qcat(1"), dsl::ParseError);
    EXPECT_THROW(dsl::parse("1 +"), dsl::ParseError);
    EXPECT_THROW(dsl::parse("foo(2)"), dsl::ParseError);
}

TEST(EvalPoly, Examples) {
    EXPECT_EQ(poly("qcat(3)"), oracle::to_poly(oracle::Coeffs{1, 0, 1, 1, 1, 0, 1}));
    EXPECT_EQ(poly("sum(k=0..n-1, q^k*qcat(k))", {{"n", 3}}), oracle::to_poly(oracle::Coeffs{1, 1, 1, 0, 1}));
    EXPECT_EQ(poly("qbin(4,2)"), oracle::to_poly(oracle::qbinomial(4, 2)));
    EXPECT_EQ(qcat::to_string(poly("qcat(2)")), "1 + q^2");
    EXPECT_EQ(poly("(1-q^3)/(1-q)"), poly("1+q+q^2"));
    EXPECT_EQ(poly("legendre3(5) + floor(7/2)"), Poly::constant(2));
}

TEST(EvalPoly, Errors) {
    EXPECT_THROW(poly("1/(1-q)"), dsl::EvalError);
    EXPECT_THROW(poly("q^(-1)"), dsl::EvalError);
    EXPECT_THROW(poly("qbin(3/2, 1)"), dsl::EvalError);
    EXPECT_THROW(poly("q^n"), dsl::EvalError);
    EXPECT_THROW(poly("1/0"), dsl::EvalError);
}

TEST(EvalCyclo, Examples) {
    auto inv = dsl::eval_cyclo(dsl::parse("1/(1-q)"), 3, 1);
    EXPECT_EQ(inv.repr(), Poly({Rational(2, 3), Rational(1, 3)}));
    EXPECT_EQ(qcat::to_string(inv), "2/3 + 1/3*x (mod Phi_3)");
    EXPECT_EQ((inv * (CycloElem(inv.field_ptr(), Rational(1)) - CycloElem::root_power(inv.field_ptr(), 1))).repr(), Poly::constant(1));
    EXPECT_EQ(dsl::eval_cyclo(dsl::parse("q^3"), 3, 1).repr(), Poly::constant(1));
    EXPECT_EQ(dsl::eval_cyclo(dsl::parse("q^(-1)"), 5, 2), CycloElem::root_power(qcat::make_field(5), 3));
    EXPECT_THROW(dsl::eval_cyclo(dsl::parse("1/(1-q^3)"), 3, 1), dsl::EvalError);
    EXPECT_THROW(dsl::eval_cyclo(dsl::parse("q"), 6, 2), std::invalid_argument);
}

TEST(EvalCyclo, AgreesWithRootIdentities) {
    const auto e = dsl::parse("sum(k=1..n, (-1)^k * q^(k*(3*k-1)/2) / (1-q^(3*k-1)))");
    EXPECT_EQ(dsl::eval_cyclo(e, 3, 1, {{"n", 1}}), qcat::main3n_sides(1, 1).lhs);
    const auto full = dsl::parse(
        "sum(k=1..n, (-1)^k * q^(k*(3*k-1)/2) / (1-q^(3*k-1))) + sum(k=1..n-1, (-1)^k * q^(k*(3*k+5)/2) / (1-q^(3*k)))");
    for (std::int64_t n = 1; n <= 6; ++n)
        for (auto j : qcat::units_mod(3 * n)) EXPECT_EQ(dsl::eval_cyclo(full, 3 * n, j, {{"n", n}}), qcat::main3n_sides(n, j).lhs);
}

TEST(ModeConsistency, RandomExpressions) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> nd(0, 5);
    for (int trial = 0; trial < 150; ++trial) {
        const std::string text = random_expr(rng, 3);
        const auto e = dsl::parse(text);
        const dsl::Bindings b{{"n", nd(rng)}};
        const Poly p = dsl::eval_poly(e, b);
        for (std::int64_t m : {3, 5, 8, 12}) {
            const auto units = qcat::units_mod(m);
            const std::int64_t j = units[static_cast<std::size_t>(trial) % units.size()];
            ASSERT_EQ(dsl::eval_cyclo(e, m, j, b), at_root(p, m, j)) << text << " at m=" << m << " j=" << j;
        }
    }
}

TEST(RoundTrip, CorpusDisplays) {
    const auto entries = dsl::load_corpus(QCATALAN_CORPUS_PATH);
    ASSERT_GE(entries.size(), 20u);
    for (const auto& entry : entries) {
        for (const auto& side : {entry.lhs, entry.rhs}) {
            const auto again = dsl::parse(dsl::render(side));
            ASSERT_TRUE(dsl::same_structure(side, again)) << entry.label << ": " << dsl::render(side);
        }
    }
}

TEST(Corpus, LineParsing) {
    auto entry = dsl::parse_corpus_line("[t] qcat(k) == qbin(2*k,k) - q*qbin(2*k,k+1) @ poly(k=0..4)", 1);
    ASSERT_TRUE(entry);
    EXPECT_EQ(entry->label, "t");
    EXPECT_EQ(entry->mode, dsl::CorpusMode::poly);
    EXPECT_EQ(dsl::expand_params(*entry).size(), 5u);
    EXPECT_FALSE(dsl::parse_corpus_line("# comment", 2));
    EXPECT_FALSE(dsl::parse_corpus_line("   ", 3));
    EXPECT_THROW(dsl::parse_corpus_line("[t] q == q", 4), dsl::ParseError);
    EXPECT_THROW(dsl::parse_corpus_line("[t] q == q @ weird(n=1)", 5), dsl::ParseError);
}

TEST(Corpus, WrongIdentityIsDetected) {
    auto good = dsl::parse_corpus_line("[x] sum(k=1..n, 1/(1-q^(3*k-1))) == n/3*(1-q^n) @ cyclo(n=1..5, m=3*n, j=all)", 1);
    auto bad = dsl::parse_corpus_line("[x] sum(k=1..n, 1/(1-q^(3*k-1))) == n/3*(1+q^n) @ cyclo(n=1..5, m=3*n, j=all)", 1);
    ASSERT_TRUE(good && bad);
    int good_fail = 0, bad_fail = 0;
    for (const auto& b : dsl::expand_params(*good)) good_fail += !dsl::verify_entry(*good, b).passed();
    for (const auto& b : dsl::expand_params(*bad)) bad_fail += !dsl::verify_entry(*bad, b).passed();
    EXPECT_EQ(good_fail, 0);
    EXPECT_GT(bad_fail, 0);

    auto phi = dsl::parse_corpus_line("[y] sum(k=0..n-1, q^k*qcat(k)) == 1 @ phi(n=2..8)", 1);
    ASSERT_TRUE(phi);
    int phi_fail = 0;
    for (const auto& b : dsl::expand_params(*phi)) phi_fail += !dsl::verify_entry(*phi, b).passed();
    EXPECT_GT(phi_fail, 0);
}
