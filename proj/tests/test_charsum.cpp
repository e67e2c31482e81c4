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

#include <algorithm>
#include <complex>
#include <numeric>

#include "qcatalan/charsum.hpp"

using qcat::DirichletChar;
using qcat::EvalMode;

namespace {

std::vector<std::int64_t> orders(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (const auto& chi : qcat::character_group(m)) out.push_back(chi.order());
    std::sort(out.begin(), out.end());
    return out;
}

/// Euler's criterion.
int legendre(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, b = a % p;
    for (std::int64_t e = (p - 1) / 2; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r == 1 ? 1 : r == 0 ? 0 : -1;
}

}  // namespace

TEST(Characters, GroupSizesAndOrders) {
    EXPECT_EQ(orders(5), (std::vector<std::int64_t>{1, 2, 4, 4}));
    EXPECT_EQ(qcat::character_group(9).size(), 6u);
    EXPECT_EQ(qcat::character_group(15).size(), 8u);
    for (std::int64_t m = 3; m <= 45; m += 2)
        EXPECT_EQ(static_cast<std::int64_t>(qcat::character_group(m).size()), qcat::euler_phi(m)) << m;
    EXPECT_THROW(qcat::character_group(8), std::invalid_argument);
    EXPECT_THROW(qcat::character_group(1), std::invalid_argument);
}

TEST(Characters, Values) {
    const auto chars = qcat::character_group(5);
    ASSERT_TRUE(chars[0].principal());
    EXPECT_EQ(qcat::char_value(chars[0], 3, 4).repr(), qcat::Poly::constant(1));
    for (const auto& chi : chars) EXPECT_TRUE(qcat::char_value(chi, 10, 4).is_zero());
    auto legendre_char = std::find_if(chars.begin(), chars.end(), [](const DirichletChar& c) { return c.order() == 2; });
    ASSERT_NE(legendre_char, chars.end());
    EXPECT_EQ(qcat::char_value(*legendre_char, 2, 2).repr(), qcat::Poly::constant(-1));
    for (std::int64_t p : {3, 7, 11, 13}) {
        for (const auto& chi : qcat::character_group(p)) {
            if (chi.order() != 2) continue;
            for (std::int64_t a = 1; a < p; ++a) EXPECT_LT(std::abs(chi.value(a) - double(legendre(a, p))), 1e-12) << p << " " << a;
        }
    }
    EXPECT_THROW(qcat::char_value(chars[1], 2, 6), std::invalid_argument);
}

TEST(Characters, OrthogonalityAndMultiplicativity) {
    for (std::int64_t m : {5, 9, 15, 21, 25, 35}) {
        const auto chars = qcat::character_group(m);
        for (std::size_t x = 0; x < chars.size(); ++x) {
            std::complex<double> s = 0;
            for (std::int64_t a = 0; a < m; ++a) s += chars[x].value(a);
            EXPECT_LT(std::abs(s - (x == 0 ? double(qcat::euler_phi(m)) : 0.0)), 1e-9) << m;
            for (std::int64_t a = 1; a < m; ++a)
                for (std::int64_t b = 1; b < m; ++b)
                    ASSERT_LT(std::abs(chars[x].value(a * b) - chars[x].value(a) * chars[x].value(b)), 1e-9);
            for (std::size_t y = 0; y < chars.size(); ++y) {
                std::complex<double> inner = 0;
                for (std::int64_t a = 0; a < m; ++a) inner += chars[x].value(a) * std::conj(chars[y].value(a));
                ASSERT_LT(std::abs(inner - (x == y ? double(qcat::euler_phi(m)) : 0.0)), 1e-9);
            }
        }
    }
}

TEST(Characters, ClosedUnderProduct) {
    const auto chars = qcat::character_group(15);
    for (const auto& a : chars)
        for (const auto& b : chars) {
            const auto c = a * b;
            auto hit = std::find_if(chars.begin(), chars.end(), [&](const DirichletChar& d) { return d.exponents() == c.exponents(); });
            EXPECT_NE(hit, chars.end());
            for (std::int64_t t = 1; t < 15; ++t) EXPECT_LT(std::abs(c.value(t) - a.value(t) * b.value(t)), 1e-9);
        }
}

TEST(Characters, ExactValueMatchesComplex) {
    for (const auto& chi : qcat::character_group(21)) {
        const std::int64_t L = std::lcm<std::int64_t>(3, chi.order());
        for (std::int64_t a = 0; a < 21; ++a) EXPECT_LT(std::abs(qcat::char_value(chi, a, L).embed() - chi.value(a)), 1e-9);
    }
}

TEST(TaoConj, Examples) {
    for (std::int64_t N : {3, 4}) {
        const auto chars = qcat::character_group(2 * N - 1);
        for (std::size_t i = 1; i < chars.size(); ++i) {
            EXPECT_TRUE(qcat::verify_taoconj(N, chars[i], EvalMode::exact).passed()) << N << " " << i;
            EXPECT_TRUE(qcat::verify_taoconj(N, chars[i], EvalMode::floating, 1e-9).passed()) << N << " " << i;
        }
        EXPECT_THROW(qcat::verify_taoconj(N, chars[0], EvalMode::exact), std::invalid_argument);
    }
    EXPECT_THROW(qcat::verify_taoconj(2, qcat::character_group(3)[1], EvalMode::exact), std::invalid_argument);
}

TEST(TaoConj, ExactImpliesFloat) {
    for (std::int64_t N = 2; N <= 13; ++N) {
        if ((2 * N - 1) % 3 == 0) continue;
        const auto chars = qcat::character_group(2 * N - 1);
        for (std::size_t i = 1; i < chars.size(); ++i) {
            ASSERT_TRUE(qcat::verify_taoconj(N, chars[i], EvalMode::exact).passed());
            ASSERT_LT(qcat::taoconj_float_residual(N, chars[i]), 1e-9);
        }
    }
}

TEST(TaoConj, SumsAgreeWithEmbedding) {
    const auto chars = qcat::character_group(11);
    for (std::size_t i = 1; i < chars.size(); ++i) {
        const auto s = qcat::compute_char_sums(6, chars[i]);
        std::complex<double> S1 = 0;
        for (std::int64_t j = 0; j < 11; ++j) S1 += double(j) * chars[i].value(6 * j + 1);
        EXPECT_LT(std::abs(s.S1.embed() - S1), 1e-9);
    }
}
