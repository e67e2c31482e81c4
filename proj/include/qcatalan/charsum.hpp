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

#ifndef QCATALAN_CHARSUM_HPP
#define QCATALAN_CHARSUM_HPP

// Dirichlet characters modulo odd m and the character-sum identity
//   S1 T1 = -S2 T2, with S1 = sum j chi(6j+1), S2 = sum j chi(6j+2),
//   T1 = sum_{k=1}^{2N-2} eps^{(2N-1)k} chi(k), T2 = sum_{|k|<N} eps^{2(2N-1)k+2} chi(k).

#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcatalan/cyclotomic.hpp"
#include "qcatalan/report.hpp"
#include "qcatalan/ring.hpp"

namespace qcat {

/// One cyclic factor (Z/p^k)^* of the unit group, with its discrete-log table.
struct PrimePowerFactor {
    std::int64_t p;
    std::int64_t k;
    std::int64_t modulus;            // p^k
    std::int64_t order;              // phi(p^k)
    std::int64_t generator;          // smallest primitive root mod p^k
    std::vector<std::int64_t> dlog;  // dlog[a] for units a mod p^k, -1 otherwise
};

/// CRT decomposition of (Z/m)^* for odd m >= 3.
struct UnitGroup {
    std::int64_t modulus;
    std::vector<PrimePowerFactor> factors;
    std::int64_t exponent;  // lcm of factor orders
};

namespace detail {

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b = mod_floor(b, m);
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

inline PrimePowerFactor make_factor(std::int64_t p, std::int64_t k) {
    PrimePowerFactor f{p, k, 1, 0, 0, {}};
    for (std::int64_t i = 0; i < k; ++i) f.modulus *= p;
    f.order = f.modulus / p * (p - 1);
    for (std::int64_t g = 2; g < f.modulus; ++g) {
        if (g % p == 0) continue;
        std::vector<std::int64_t> table(static_cast<std::size_t>(f.modulus), -1);
        std::int64_t x = 1, count = 0;
        do {
            table[static_cast<std::size_t>(x)] = count++;
            x = x * g % f.modulus;
        } while (x != 1);
        if (count == f.order) {
            f.generator = g;
            f.dlog = std::move(table);
            return f;
        }
    }
    throw std::logic_error("no primitive root mod " + std::to_string(f.modulus));
}

}  // namespace detail

inline std::shared_ptr<const UnitGroup> unit_group(std::int64_t m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("unit_group: modulus must be odd and >= 3, got " + std::to_string(m));
    auto g = std::make_shared<UnitGroup>();
    g->modulus = m;
    g->exponent = 1;
    std::int64_t rest = m;
    for (std::int64_t p = 3; p * p <= rest; p += 2) {
        if (rest % p) continue;
        std::int64_t k = 0;
        while (rest % p == 0) rest /= p, ++k;
        g->factors.push_back(detail::make_factor(p, k));
    }
    if (rest > 1) g->factors.push_back(detail::make_factor(rest, 1));
    for (const auto& f : g->factors) g->exponent = std::lcm(g->exponent, f.order);
    return g;
}

/**
 * A Dirichlet character mod m, chi(g_i) = exp(2 pi i exponents[i] / order_i)
 * on the chosen generator g_i of each prime-power factor.
 */
class DirichletChar {
  public:
    DirichletChar(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> exponents)
        : group_(std::move(group)), exponents_(std::move(exponents)) {
        if (exponents_.size() != group_->factors.size()) throw std::invalid_argument("DirichletChar: exponent vector length mismatch");
        order_ = 1;
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            const std::int64_t n = group_->factors[i].order;
            exponents_[i] = mod_floor(exponents_[i], n);
            order_ = std::lcm(order_, n / std::gcd(exponents_[i], n));
        }
    }

    std::int64_t modulus() const { return group_->modulus; }
    const UnitGroup& group() const { return *group_; }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }
    /// Order e of chi: chi(a)^e = 1 on units.
    std::int64_t order() const { return order_; }
    bool principal() const { return order_ == 1; }

    /// t with chi(a) = exp(2 pi i t / e), or nullopt when gcd(a, m) > 1.
    std::optional<std::int64_t> exponent_of(std::int64_t a) const {
        const std::int64_t m = group_->modulus;
        a = mod_floor(a, m);
        if (std::gcd(a, m) != 1) return std::nullopt;
        const std::int64_t G = group_->exponent;
        std::int64_t tG = 0;
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            const auto& f = group_->factors[i];
            const std::int64_t d = f.dlog[static_cast<std::size_t>(a % f.modulus)];
            tG = mod_floor(tG + exponents_[i] * d % f.order * (G / f.order), G);
        }
        // chi(a) = zeta_G^{tG}, an e-th root of unity
        if (tG * order_ % G) throw std::logic_error("DirichletChar: value outside mu_e");
        return tG * order_ / G;
    }

    /// Complex value, computed from the factor phases directly.
    std::complex<double> value(std::int64_t a) const {
        const std::int64_t m = group_->modulus;
        a = mod_floor(a, m);
        if (std::gcd(a, m) != 1) return 0.0;
        double turns = 0.0;
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            const auto& f = group_->factors[i];
            const std::int64_t d = f.dlog[static_cast<std::size_t>(a % f.modulus)];
            turns += static_cast<double>(exponents_[i] * d % f.order) / static_cast<double>(f.order);
        }
        return std::polar(1.0, 2.0 * std::numbers::pi * turns);
    }

    /// Smallest d | m such that chi is trivial on units congruent to 1 mod d.
    std::int64_t conductor() const {
        const std::int64_t m = group_->modulus;
        for (std::int64_t d = 1; d <= m; ++d) {
            if (m % d) continue;
            bool trivial = true;
            for (std::int64_t a = 1; a < m && trivial; a += d)
                if (std::gcd(a, m) == 1 && *exponent_of(a) != 0) trivial = false;
            if (trivial) return d;
        }
        return m;
    }

    friend DirichletChar operator*(const DirichletChar& a, const DirichletChar& b) {
        if (a.modulus() != b.modulus()) throw std::invalid_argument("DirichletChar: modulus mismatch");
        std::vector<std::int64_t> e(a.exponents_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents_[i] + b.exponents_[i];
        return DirichletChar(a.group_, std::move(e));
    }

  private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::int64_t> exponents_;
    std::int64_t order_ = 1;
};

/// All phi(m) characters mod m; the principal one comes first.
inline std::vector<DirichletChar> character_group(std::int64_t m) {
    auto g = unit_group(m);
    std::vector<DirichletChar> out;
    std::vector<std::int64_t> e(g->factors.size(), 0);
    while (true) {
        out.emplace_back(g, e);
        std::size_t i = 0;
        for (; i < e.size(); ++i) {
            if (++e[i] < g->factors[i].order) break;
            e[i] = 0;
        }
        if (i == e.size()) break;
    }
    return out;
}

/// chi(a) as zeta_L^{(L/e) t} in Q(zeta_L); zero for non-units.
inline CycloElem char_value(const DirichletChar& chi, std::int64_t a, const std::shared_ptr<const CycloField>& field) {
    const std::int64_t L = field->order();
    if (L % chi.order()) throw std::invalid_argument("char_value: order " + std::to_string(chi.order()) + " does not divide L = " + std::to_string(L));
    auto t = chi.exponent_of(a);
    if (!t) return CycloElem(field, Rational(0));
    return CycloElem::root_power(field, L / chi.order() * *t);
}

inline CycloElem char_value(const DirichletChar& chi, std::int64_t a, std::int64_t L) { return char_value(chi, a, make_field(L)); }

/// String form of chi(a): "0", "1" or "z<e>^t".
inline std::string char_value_string(const DirichletChar& chi, std::int64_t a) {
    auto t = chi.exponent_of(a);
    if (!t) return "0";
    if (*t == 0) return "1";
    return "z" + std::to_string(chi.order()) + "^" + std::to_string(*t);
}

struct CharSums {
    CycloElem S1, S2, T1, T2;
};

inline std::int64_t char_sum_field_order(const DirichletChar& chi) { return std::lcm<std::int64_t>(3, chi.order()); }

inline void check_char_sum_args(std::int64_t N, const DirichletChar& chi) {
    if (N < 2) throw std::invalid_argument("char sums: N must be >= 2");
    const std::int64_t m = 2 * N - 1;
    if (m % 3 == 0) throw std::invalid_argument("char sums: 3 divides 2N-1 = " + std::to_string(m));
    if (chi.modulus() != m) throw std::invalid_argument("char sums: character modulus must be 2N-1");
}

inline CharSums compute_char_sums(std::int64_t N, const DirichletChar& chi) {
    check_char_sum_args(N, chi);
    const std::int64_t m = 2 * N - 1;
    const std::int64_t L = char_sum_field_order(chi);
    auto field = make_field(L);
    auto eps = [&](std::int64_t t) { return CycloElem::root_power(field, L / 3 * mod_floor(t, 3)); };
    CharSums s{CycloElem(field, Rational(0)), CycloElem(field, Rational(0)), CycloElem(field, Rational(0)), CycloElem(field, Rational(0))};
    for (std::int64_t j = 0; j <= m - 1; ++j) {
        s.S1 += char_value(chi, 6 * j + 1, field) * Rational(j);
        s.S2 += char_value(chi, 6 * j + 2, field) * Rational(j);
    }
    for (std::int64_t k = 1; k <= m - 1; ++k) s.T1 += eps(m * k) * char_value(chi, k, field);
    for (std::int64_t k = 1 - N; k <= N - 1; ++k) s.T2 += eps(2 * m * k + 2) * char_value(chi, k, field);
    return s;
}

/// |S1 T1 + S2 T2| in complex doubles, with chi and eps evaluated independently of the field path.
inline double taoconj_float_residual(std::int64_t N, const DirichletChar& chi) {
    check_char_sum_args(N, chi);
    const std::int64_t m = 2 * N - 1;
    auto eps = [](std::int64_t t) { return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod_floor(t, 3)) / 3.0); };
    std::complex<double> S1 = 0.0, S2 = 0.0, T1 = 0.0, T2 = 0.0;
    for (std::int64_t j = 0; j <= m - 1; ++j) {
        S1 += static_cast<double>(j) * chi.value(6 * j + 1);
        S2 += static_cast<double>(j) * chi.value(6 * j + 2);
    }
    for (std::int64_t k = 1; k <= m - 1; ++k) T1 += eps(m * k) * chi.value(k);
    for (std::int64_t k = 1 - N; k <= N - 1; ++k) T2 += eps(2 * m * k + 2) * chi.value(k);
    return std::abs(S1 * T1 + S2 * T2);
}

enum class EvalMode { exact, floating };

inline Params taoconj_params(std::int64_t N, const DirichletChar& chi, std::int64_t index) {
    return {{"N", N}, {"chi", index}, {"order", chi.order()}, {"conductor", chi.conductor()}};
}

/// `index` only labels the report (position in character_group order).
inline VerificationReport verify_taoconj(std::int64_t N, const DirichletChar& chi, EvalMode mode, double tol = 1e-9,
                                         std::int64_t index = -1) {
    Stopwatch sw;
    check_char_sum_args(N, chi);
    if (chi.principal()) throw std::invalid_argument("verify_taoconj: character must be non-principal");
    Params params = taoconj_params(N, chi, index);
    if (mode == EvalMode::exact) {
        const CharSums s = compute_char_sums(N, chi);
        CycloElem r = s.S1 * s.T1 + s.S2 * s.T2;
        if (r.is_zero()) return make_pass("taoconj", std::move(params), sw);
        return make_fail("taoconj", std::move(params), to_string(r), sw);
    }
    if (!(tol > 0)) throw std::invalid_argument("verify_taoconj: tolerance must be positive");
    const double r = taoconj_float_residual(N, chi);
    params.emplace_back("float", 1);
    if (r < tol) return make_pass("taoconj", std::move(params), sw);
    char buf[64];
    std::snprintf(buf, sizeof buf, "|S1 T1 + S2 T2| = %.3e", r);
    return make_fail("taoconj", std::move(params), buf, sw);
}

}  // namespace qcat

#endif  // QCATALAN_CHARSUM_HPP
