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

#include "oracles.hpp"
#include "qcatalan/ring.hpp"

using qcat::Poly;
using qcat::Rational;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9), den(1, 5);
    std::vector<Rational> c;
    for (int i = deg(rng); i >= 0; --i) c.emplace_back(mpz_class(coef(rng)), mpz_class(den(rng)));
    return Poly(std::move(c));
}

}  // namespace

TEST(Rational, ArithmeticAndCanonicalForm) {
    EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
    EXPECT_EQ((Rational(1, 2) + Rational(1, 3)).to_string(), "5/6");
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
    EXPECT_EQ(Rational(2).pow(-3), Rational(1, 8));
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
    EXPECT_THROW(Rational(1, 2).to_int64(), std::domain_error);
}

TEST(Poly, AdditionCancels) { EXPECT_EQ(Poly({1, 1}) + Poly({1, -1}), Poly::constant(2)); }

TEST(Poly, DifferenceOfSquares) { EXPECT_EQ(Poly({1, 1}) * Poly({1, -1}), Poly({1, 0, -1})); }

TEST(Poly, ZeroAbsorbs) {
    const Poly z = Poly({1, 1, 1}) * Poly{};
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
}

TEST(Poly, DivremExactFactor) {
    auto [quot, rem] = qcat::divrem(Poly({-1, 0, 1}), Poly({-1, 1}));
    EXPECT_EQ(quot, Poly({1, 1}));
    EXPECT_TRUE(rem.is_zero());
}

TEST(Poly, DivremAgainstHandDivision) {
    auto [quot, rem] = qcat::divrem(Poly::monomial(1, 3), Poly({1, 1, 1}));
    auto [oq, orem] = oracle::long_divide(oracle::monomial(3), {1, 1, 1});
    EXPECT_EQ(oracle::from(quot), oq);
    EXPECT_EQ(oracle::from(rem), orem);
    EXPECT_EQ(quot, Poly({-1, 1}));
    EXPECT_EQ(rem, Poly::constant(1));
}

TEST(Poly, DivremLowDegreeDividend) {
    auto [quot, rem] = qcat::divrem(Poly::constant(5), Poly({1, 1}));
    EXPECT_TRUE(quot.is_zero());
    EXPECT_EQ(rem, Poly::constant(5));
    EXPECT_THROW(qcat::divrem(Poly::constant(5), Poly{}), std::domain_error);
}

TEST(Poly, DivremMatchesOracleOnRandomInputs) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(rng, 14), b = random_poly(rng, 6);
        if (b.is_zero()) continue;
        auto [quot, rem] = qcat::divrem(a, b);
        auto [oq, orem] = oracle::long_divide(oracle::from(a), oracle::from(b));
        ASSERT_EQ(oracle::from(quot), oq);
        ASSERT_EQ(oracle::from(rem), orem);
        ASSERT_LT(rem.degree(), b.degree());
    }
}

TEST(Poly, MultiplicationMatchesOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Poly a = random_poly(rng, 10), b = random_poly(rng, 10);
        ASSERT_EQ(oracle::from(a * b), oracle::mul(oracle::from(a), oracle::from(b)));
    }
}

TEST(Poly, Evaluation) {
    EXPECT_EQ(qcat::eval(Poly({1, 0, 1}), Rational(1)), Rational(2));
    EXPECT_EQ(qcat::eval(Poly({1, 0, 1, 1, 1, 0, 1}), Rational(1)), Rational(5));
    EXPECT_EQ(qcat::eval(Poly({-1, 1}), Rational(0)), Rational(-1));
}

TEST(Poly, Rendering) {
    EXPECT_EQ(qcat::to_string(Poly({1, 0, 1})), "1 + q^2");
    EXPECT_EQ(qcat::to_string(Poly({Rational(2, 3), Rational(-1, 3)}), "x"), "2/3 - 1/3*x");
    EXPECT_EQ(qcat::to_string(Poly{}), "0");
    EXPECT_EQ(qcat::to_string(Poly({0, -1})), "-q");
}

TEST(Poly, InverseModulo) {
    const Poly m({1, 1, 1});
    auto inv = qcat::inverse_mod(Poly({1, -1}), m);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ((*inv * Poly({1, -1})) % m, Poly::constant(1));
    EXPECT_FALSE(qcat::inverse_mod(Poly({1, 1, 1}), m).has_value());
}
