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

#include "oracles.hpp"
#include "qcatalan/qcomb.hpp"

using qcat::Poly;
using qcat::Rational;

TEST(QPochhammer, Examples) {
    EXPECT_EQ(qcat::q_pochhammer(1, 0), Poly::constant(1));
    EXPECT_EQ(qcat::q_pochhammer(1, 2), Poly({1, -1, -1, 1}));
    EXPECT_EQ(qcat::q_pochhammer(2, 1), Poly({1, 0, -1}));
    EXPECT_TRUE(qcat::q_pochhammer(0, 3).is_zero());
}

TEST(GaussianBinomial, Examples) {
    EXPECT_EQ(qcat::gaussian_binomial(2, 1), Poly({1, 1}));
    EXPECT_EQ(qcat::gaussian_binomial(4, 2), Poly({1, 1, 2, 1, 1}));
    EXPECT_TRUE(qcat::gaussian_binomial(3, 5).is_zero());
    EXPECT_TRUE(qcat::gaussian_binomial(3, -1).is_zero());
}

TEST(GaussianBinomial, MatchesQPascalRecurrence) {
    for (int n = 0; n <= 16; ++n)
        for (int k = 0; k <= n; ++k) ASSERT_EQ(oracle::from(qcat::gaussian_binomial(n, k)), oracle::qbinomial(n, k)) << n << "," << k;
}

TEST(GaussianBinomial, ValueAtOneIsBinomial) {
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            ASSERT_EQ(qcat::eval(qcat::gaussian_binomial(n, k), Rational(1)), Rational(b));
        }
}

TEST(QCatalan, FirstValues) {
    EXPECT_EQ(qcat::q_catalan(0), Poly::constant(1));
    EXPECT_EQ(qcat::q_catalan(1), Poly::constant(1));
    EXPECT_EQ(qcat::q_catalan(2), Poly({1, 0, 1}));
    EXPECT_EQ(qcat::q_catalan(3), Poly({1, 0, 1, 1, 1, 0, 1}));
    EXPECT_THROW(qcat::q_catalan(-1), std::invalid_argument);
}

TEST(QCatalan, StreamingMatchesDirectFormula) {
    qcat::CatalanSequence seq;
    qcat::CentralBinomials central;
    for (int k = 0; k <= 25; ++k, seq.advance(), central.advance()) {
        ASSERT_EQ(seq.index(), k);
        ASSERT_EQ(seq.current(), qcat::q_catalan(k));
        ASSERT_EQ(central.current(), qcat::gaussian_binomial(2 * k, k));
    }
}

TEST(MajOracle, SmallWords) {
    EXPECT_EQ(qcat::BallotWord({0, 1}).maj(), 0u);
    EXPECT_EQ(qcat::BallotWord({0, 0, 1, 1}).maj(), 0u);
    EXPECT_EQ(qcat::BallotWord({0, 1, 0, 1}).maj(), 2u);
    EXPECT_EQ(qcat::q_catalan_maj_oracle(1), Poly::constant(1));
    EXPECT_EQ(qcat::q_catalan_maj_oracle(2), Poly({1, 0, 1}));
    EXPECT_EQ(qcat::q_catalan_maj_oracle(3), Poly({1, 0, 1, 1, 1, 0, 1}));
    EXPECT_THROW(qcat::BallotWord({1, 0}), std::invalid_argument);
    EXPECT_THROW(qcat::q_catalan_maj_oracle(11), std::out_of_range);
}

TEST(MajOracle, AgreesWithBitmaskScanAndFormula) {
    for (int k = 0; k <= 8; ++k) {
        const auto by_scan = oracle::maj_by_bitmask(k);
        ASSERT_EQ(oracle::from(qcat::q_catalan_maj_oracle(k)), by_scan) << "k = " << k;
        ASSERT_EQ(oracle::from(qcat::q_catalan(k)), by_scan) << "k = " << k;
    }
}

TEST(Legendre3, Values) {
    EXPECT_EQ(qcat::legendre3(1), 1);
    EXPECT_EQ(qcat::legendre3(2), -1);
    EXPECT_EQ(qcat::legendre3(-3), 0);
    EXPECT_EQ(qcat::legendre3(-1), -1);
}

TEST(CatalanSum, SmallValues) {
    EXPECT_EQ(qcat::catalan_sum(1), Poly::constant(1));
    EXPECT_EQ(qcat::catalan_sum(2), Poly({1, 1}));
    EXPECT_EQ(qcat::catalan_sum(3), Poly({1, 1, 1, 0, 1}));
    EXPECT_THROW(qcat::catalan_sum(0), std::invalid_argument);
}

TEST(CatalanSum, ExpansionOracle) {
    for (int n = 1; n <= 10; ++n) {
        oracle::Coeffs total;
        for (int k = 0; k < n; ++k) {
            const auto ck = oracle::add(oracle::qbinomial(2 * k, k), oracle::mul(oracle::monomial(1), oracle::qbinomial(2 * k, k + 1)), -1);
            total = oracle::add(total, oracle::mul(oracle::monomial(static_cast<std::size_t>(k)), ck));
        }
        ASSERT_EQ(oracle::from(qcat::catalan_sum(n)), total);
    }
}
