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

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qcatalan/cyclotomic.hpp"

using qcat::CycloElem;
using qcat::Poly;
using qcat::Rational;

TEST(Cyclotomic, SmallCases) {
    EXPECT_EQ(qcat::cyclotomic_poly(1), Poly({-1, 1}));
    EXPECT_EQ(qcat::cyclotomic_poly(3), Poly({1, 1, 1}));
    EXPECT_EQ(qcat::cyclotomic_poly(6), Poly({1, -1, 1}));
    EXPECT_THROW(qcat::cyclotomic_poly(0), std::invalid_argument);
}

TEST(Cyclotomic, Phi6ByDividingOutTheOtherFactors) {
    oracle::Coeffs num = oracle::add(oracle::monomial(6), {1}, -1);
    const oracle::Coeffs den = oracle::mul(oracle::mul({-1, 1}, {1, 1}), {1, 1, 1});
    auto [quot, rem] = oracle::long_divide(num, den);
    EXPECT_TRUE(rem.empty());
    EXPECT_EQ(oracle::from(qcat::cyclotomic_poly(6)), quot);
}

TEST(Cyclotomic, ProductOverDivisorsAndDegree) {
    for (std::int64_t n = 1; n <= 60; ++n) {
        oracle::Coeffs prod{1};
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) prod = oracle::mul(prod, oracle::from(qcat::cyclotomic_poly(d)));
        ASSERT_EQ(prod, oracle::add(oracle::monomial(static_cast<std::size_t>(n)), {1}, -1)) << "n = " << n;
        ASSERT_EQ(qcat::cyclotomic_poly(n).degree(), qcat::euler_phi(n));
    }
}

TEST(Cyclotomic, ReduceModPhiPower) {
    const Poly q3m1 = Poly::monomial(1, 3) - Poly::constant(1);
    EXPECT_TRUE(qcat::reduce_mod_phi_power(q3m1, 3, 1).is_zero());
    EXPECT_TRUE(qcat::reduce_mod_phi_power(Poly{}, 5, 2).is_zero());
    for (std::int64_t n = 2; n <= 12; ++n) {
        const Poly p = Poly::monomial(1, static_cast<std::size_t>(n)) - Poly::constant(1);
        const Poly r = qcat::reduce_mod_phi_power(p, n, 2);
        EXPECT_FALSE(r.is_zero());
        const auto phi = oracle::from(qcat::cyclotomic_poly(n));
        EXPECT_EQ(oracle::from(r), oracle::long_divide(oracle::from(p), oracle::mul(phi, phi)).second);
    }
    EXPECT_LT(qcat::reduce_mod_phi_power(q3m1, 3, 2).degree(), 4);
}

TEST(Cyclotomic, ReductionOfHighDegreeInputMatchesOracle) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (std::int64_t n : {3, 4, 6, 9, 10}) {
        std::vector<Rational> c;
        for (int i = 0; i < 120; ++i) c.emplace_back(coef(rng));
        const Poly p(std::move(c));
        const auto phi = oracle::from(qcat::cyclotomic_poly(n));
        ASSERT_EQ(oracle::from(qcat::reduce_mod_phi_power(p, n, 2)), oracle::long_divide(oracle::from(p), oracle::mul(phi, phi)).second);
    }
}

TEST(CycloField, RootPowers) {
    EXPECT_EQ(qcat::cyclo_from_root_power(4, 1).repr(), Poly({0, 1}));
    EXPECT_EQ(qcat::cyclo_from_root_power(3, 3).repr(), Poly::constant(1));
    EXPECT_EQ(qcat::cyclo_from_root_power(3, 2).repr(), Poly({-1, -1}));
    EXPECT_TRUE(qcat::cyclo_is_zero(qcat::cyclo_from_root_power(3, 3) - CycloElem(qcat::make_field(3), Rational(1))));
}

TEST(CycloField, NormAndInverse) {
    auto f = qcat::make_field(3);
    const CycloElem one(f, Rational(1));
    const CycloElem q = CycloElem::root_power(f, 1);
    EXPECT_EQ((one - q) * (one - q * q), CycloElem(f, Rational(3)));
    const CycloElem inv = (one - q * q).inverse();
    EXPECT_EQ(inv.repr(), Poly({Rational(1, 3), Rational(-1, 3)}));
    EXPECT_EQ(inv * (one - q * q), one);
    EXPECT_THROW(CycloElem(f, Rational(0)).inverse(), std::domain_error);
}

TEST(CycloField, ZeroTests) {
    auto f = qcat::make_field(3);
    const CycloElem q = CycloElem::root_power(f, 1);
    const CycloElem one(f, Rational(1));
    EXPECT_TRUE(qcat::cyclo_is_zero(one + q + q * q));
    EXPECT_FALSE(qcat::cyclo_is_zero(one + q));
}

TEST(CycloField, DivisionByItselfIsOne) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (std::int64_t m : {5, 7, 9, 12, 15}) {
        auto f = qcat::make_field(m);
        const CycloElem one(f, Rational(1));
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> c;
            for (int i = 0; i < m; ++i) c.emplace_back(coef(rng));
            const CycloElem a(f, Poly(std::move(c)));
            if (a.is_zero()) continue;
            ASSERT_EQ(qcat::cyclo_arith(a, a, qcat::FieldOp::div), one);
        }
    }
}

TEST(CycloField, EmbeddingAgreesWithComplexArithmetic) {
    auto f = qcat::make_field(12);
    const CycloElem q = CycloElem::root_power(f, 5);
    const CycloElem one(f, Rational(1));
    const CycloElem e = (one + q * Rational(2)) / (one - q * q * q);
    const auto z = oracle::root(12, 5);
    const auto expected = (1.0 + 2.0 * z) / (1.0 - z * z * z);
    EXPECT_LT(std::abs(e.embed(1) - expected), 1e-12);
}

TEST(CycloField, MixedFieldsRejected) {
    EXPECT_THROW(qcat::cyclo_from_root_power(3, 1) + qcat::cyclo_from_root_power(4, 1), std::invalid_argument);
}
