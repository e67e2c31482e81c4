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

#ifndef QCATALAN_ROOTID_HPP
#define QCATALAN_ROOTID_HPP

// Root-of-unity identity suites. Every exact check is a zero test in a single
// cyclotomic field Q(zeta_m); q is the residue class x^j.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcatalan/cyclotomic.hpp"
#include "qcatalan/report.hpp"
#include "qcatalan/ring.hpp"

namespace qcat {

struct CycloSides {
    CycloElem lhs;
    CycloElem rhs;
};

namespace detail {

inline Rational frac(std::int64_t a, std::int64_t b) { return Rational(mpz_class(a), mpz_class(b)); }

inline void require_coprime(std::int64_t j, std::int64_t m, const char* suite) {
    if (std::gcd(j, m) != 1)
        throw std::invalid_argument(std::string(suite) + ": gcd(j, " + std::to_string(m) + ") != 1 for j = " + std::to_string(j));
}

/// Sum of f(k) for k in [lo, hi]; empty ranges give zero.
template <class F>
CycloElem field_sum(const std::shared_ptr<const CycloField>& field, std::int64_t lo, std::int64_t hi, F&& f) {
    CycloElem total(field, Rational(0));
    for (std::int64_t k = lo; k <= hi; ++k) total += f(k);
    return total;
}

inline VerificationReport sides_report(std::string suite, Params params, const CycloElem& lhs, const CycloElem& rhs,
                                       const Stopwatch& sw) {
    CycloElem diff = lhs - rhs;
    if (diff.is_zero()) return make_pass(std::move(suite), std::move(params), sw);
    return make_fail(std::move(suite), std::move(params), to_string(diff), sw);
}

}  // namespace detail

/// q = zeta_{3n}^j with gcd(j, 3n) = 1.
struct RootContext {
    std::int64_t n;
    std::int64_t j;
    std::shared_ptr<const CycloField> field;

    RootContext(std::int64_t n_, std::int64_t j_) : n(n_), j(j_) {
        if (n < 1) throw std::invalid_argument("RootContext: n must be >= 1");
        detail::require_coprime(j, 3 * n, "RootContext");
        field = make_field(3 * n);
    }

    /// q^t
    CycloElem q(std::int64_t t = 1) const { return CycloElem::root_power(field, j * t); }
    CycloElem constant(const Rational& c) const { return CycloElem(field, c); }
    /// 1 / (1 - q^t); t must not be a multiple of 3n.
    CycloElem inv_one_minus(std::int64_t t) const {
        if (mod_floor(t, 3 * n) == 0) throw std::logic_error("zero denominator 1 - q^" + std::to_string(t));
        return (constant(1) - q(t)).inverse();
    }
    /// q is a primitive (3n)-th root: q^t != 1 for 0 < t < 3n and q^{3n} = 1.
    bool primitive() const {
        if (!(q(3 * n) - constant(1)).is_zero()) return false;
        for (std::int64_t t = 1; t < 3 * n; ++t)
            if ((q(t) - constant(1)).is_zero()) return false;
        return true;
    }
};

/// Units j in [1, m) (j = 1 when m = 1).
inline std::vector<std::int64_t> units_mod(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t j = 1; j < std::max<std::int64_t>(m, 2); ++j)
        if (std::gcd(j, m) == 1) out.push_back(j);
    return out;
}

// ---------------------------------------------------------------------------
// sum_{k=1}^{n} (-1)^k q^{k(3k-1)/2} / (1 - q^{3k-1})
//   + sum_{k=1}^{n-1} (-1)^k q^{k(3k+5)/2} / (1 - q^{3k})  =  1/3 + (3n+1)/6 q^{2n}

inline CycloSides main3n_sides(std::int64_t n, std::int64_t j) {
    RootContext ctx(n, j);
    auto sgn = [](std::int64_t k) { return Rational(k % 2 ? -1 : 1); };
    CycloElem lhs = detail::field_sum(ctx.field, 1, n, [&](std::int64_t k) {
        if ((k * (3 * k - 1)) % 2) throw std::logic_error("main3n: non-integral exponent");
        return ctx.q(k * (3 * k - 1) / 2) * ctx.inv_one_minus(3 * k - 1) * sgn(k);
    });
    lhs += detail::field_sum(ctx.field, 1, n - 1, [&](std::int64_t k) {
        if ((k * (3 * k + 5)) % 2) throw std::logic_error("main3n: non-integral exponent");
        return ctx.q(k * (3 * k + 5) / 2) * ctx.inv_one_minus(3 * k) * sgn(k);
    });
    CycloElem rhs = ctx.constant(detail::frac(1, 3)) + ctx.q(2 * n) * detail::frac(3 * n + 1, 6);
    return {std::move(lhs), std::move(rhs)};
}

inline VerificationReport verify_main3n(std::int64_t n, std::int64_t j) {
    Stopwatch sw;
    auto [lhs, rhs] = main3n_sides(n, j);
    return detail::sides_report("main3n", {{"n", n}, {"j", j}}, lhs, rhs, sw);
}

// ---------------------------------------------------------------------------
// Companion for 3 not dividing n, q = zeta_n^j:
//   sum_{k<=n/3} (-1)^k q^{k(3k-1)/2} / (1 - q^{3k-1}) + sum_{k<=(n-1)/3} (-1)^k q^{k(3k+5)/2} / (1 - q^{3k})
//     = -(n-1)/6 if n == 1 (mod 3), 0 if n == 2 (mod 3).

inline CycloSides liu_mirror_sides(std::int64_t n, std::int64_t j) {
    if (n < 1 || n % 3 == 0) throw std::invalid_argument("liu-mirror: need n >= 1 with 3 not dividing n");
    detail::require_coprime(j, n, "liu-mirror");
    auto field = make_field(n);
    auto q = [&](std::int64_t t) { return CycloElem::root_power(field, j * t); };
    const CycloElem one(field, Rational(1));
    auto sgn = [](std::int64_t k) { return Rational(k % 2 ? -1 : 1); };
    CycloElem lhs = detail::field_sum(field, 1, n / 3, [&](std::int64_t k) { return q(k * (3 * k - 1) / 2) / (one - q(3 * k - 1)) * sgn(k); });
    lhs += detail::field_sum(field, 1, (n - 1) / 3, [&](std::int64_t k) { return q(k * (3 * k + 5) / 2) / (one - q(3 * k)) * sgn(k); });
    CycloElem rhs(field, n % 3 == 1 ? detail::frac(-(n - 1), 6) : Rational(0));
    return {std::move(lhs), std::move(rhs)};
}

inline VerificationReport verify_liu_mirror(std::int64_t n, std::int64_t j) {
    Stopwatch sw;
    auto [lhs, rhs] = liu_mirror_sides(n, j);
    return detail::sides_report("liu-mirror", {{"n", n}, {"j", j}}, lhs, rhs, sw);
}

// ---------------------------------------------------------------------------
// Rearrangement lemma, checked after z = w^2 as a rational-function identity in w.

struct MidSides {
    Rational lhs;
    Rational rhs;
};

/// Both sides at z = w^2; throws std::domain_error at a pole.
inline MidSides mid_sides(std::int64_t n, const Rational& w) {
    auto p = [&](std::int64_t e) { return w.pow(e); };
    auto over = [](const Rational& num, const Rational& den) {
        if (den.is_zero()) throw std::domain_error("mid: sample point is a pole");
        return num / den;
    };
    auto sgn = [](std::int64_t k) { return Rational(k % 2 ? -1 : 1); };
    Rational lhs, rhs;
    for (std::int64_t k = 1; k <= n; ++k) lhs += sgn(k) * over(p(k * (3 * k - 1)), Rational(1) - p(2 * (3 * k - 1)));
    for (std::int64_t k = 1; k <= n - 1; ++k) lhs += sgn(k) * over(p(k * (3 * k + 5)), Rational(1) - p(6 * k));

    const Rational half = detail::frac(1, 2);
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        rhs += sgn(n - 1) * half * over(p(k * (3 * n + 2)), Rational(1) + p(3 * k));
        rhs += half * sgn(k) * over(p(k * (3 * n + 2)), Rational(1) - p(3 * k));
    }
    for (std::int64_t k = 1; k <= n; ++k) rhs += over(Rational(1), Rational(1) - p(2 * (3 * k - 1)));
    for (std::int64_t k = 1; k <= (n + 1) / 2; ++k) rhs -= over(Rational(1), Rational(1) - p(2 * (3 * k - 2)));
    rhs -= detail::frac(2 * n - 1 + (n % 2 ? -1 : 1), 4);
    return {std::move(lhs), std::move(rhs)};
}

/// Degree bound D for the numerator of (lhs - rhs) over the product of all
/// denominators, as a polynomial in w: total denominator degree plus the
/// largest numerator degree. D+1 agreements away from the poles force it to zero.
inline std::int64_t mid_degree_bound(std::int64_t n) {
    std::int64_t den = 0, num = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        den += 2 * (3 * k - 1) * 2;  // appears on both sides
        num = std::max(num, k * (3 * k - 1));
    }
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        den += 6 * k + 3 * k + 3 * k;
        num = std::max({num, k * (3 * k + 5), k * (3 * n + 2)});
    }
    for (std::int64_t k = 1; k <= (n + 1) / 2; ++k) den += 2 * (3 * k - 2);
    return den + num;
}

/// Exact agreement at the given sample points; a pole skips the point and the
/// caller must supply enough points. Returns the number of agreeing points and
/// the first disagreement, if any.
struct MidEvaluation {
    std::int64_t agreements = 0;
    std::int64_t poles = 0;
    std::optional<std::string> mismatch;
};

inline MidEvaluation evaluate_mid(std::int64_t n, const std::vector<Rational>& points) {
    MidEvaluation out;
    for (const auto& w : points) {
        MidSides s;
        try {
            s = mid_sides(n, w);
        } catch (const std::domain_error&) {
            ++out.poles;
            continue;
        }
        if (s.lhs == s.rhs) {
            ++out.agreements;
        } else if (!out.mismatch) {
            out.mismatch = "w = " + w.to_string() + ": lhs - rhs = " + (s.lhs - s.rhs).to_string();
        }
    }
    return out;
}

/// Deterministic certification: D+1 distinct integer points w = 2, 3, ...
/// (never poles, since every denominator is 1 +- w^a with a >= 1).
inline VerificationReport verify_mid_identity(std::int64_t n) {
    Stopwatch sw;
    if (n < 2) throw std::invalid_argument("verify_mid_identity: n must be >= 2");
    const std::int64_t bound = mid_degree_bound(n);
    std::vector<Rational> points;
    points.reserve(static_cast<std::size_t>(bound + 1));
    for (std::int64_t i = 0; i <= bound; ++i) points.emplace_back(i + 2);
    MidEvaluation ev = evaluate_mid(n, points);
    Params params{{"n", n}, {"degree_bound", bound}, {"points", ev.agreements}};
    if (ev.mismatch) return make_fail("mid", params, *ev.mismatch, sw);
    if (ev.agreements <= bound) return make_fail("mid", params, "only " + std::to_string(ev.agreements) + " agreements", sw);
    return make_pass("mid", params, sw);
}

// ---------------------------------------------------------------------------
// sum_{k=1}^{m} 1 / (1 - z^{-1} alpha^k) = m / (1 - z^{-m}), alpha = zeta_m.

inline CycloSides extan_sides(std::int64_t m, const Rational& z) {
    if (m < 1) throw std::invalid_argument("extan: m must be >= 1");
    if (z.is_zero()) throw std::invalid_argument("extan: z must be nonzero");
    if (z.pow(m) == Rational(1)) throw std::invalid_argument("extan: z^m = 1");
    auto field = make_field(m);
    const Rational zinv = Rational(1) / z;
    CycloElem lhs = detail::field_sum(field, 1, m, [&](std::int64_t k) {
        return (CycloElem(field, Rational(1)) - CycloElem::root_power(field, k) * zinv).inverse();
    });
    CycloElem rhs(field, Rational(m) / (Rational(1) - zinv.pow(m)));
    return {std::move(lhs), std::move(rhs)};
}

inline VerificationReport verify_extan(std::int64_t m, const Rational& z) {
    Stopwatch sw;
    auto [lhs, rhs] = extan_sides(m, z);
    auto rep = detail::sides_report("extan", {{"m", m}, {"z_num", z.numerator().get_si()}, {"z_den", z.denominator().get_si()}},
                                    lhs, rhs, sw);
    return rep;
}

// ---------------------------------------------------------------------------
// sum_{k=1}^{n} 1/(1 - q^{3k-1}) = (n/3)(1 - q^n), q = zeta_{3n}^j.

inline CycloSides explicit_sides(std::int64_t n, std::int64_t j) {
    RootContext ctx(n, j);
    CycloElem lhs = detail::field_sum(ctx.field, 1, n, [&](std::int64_t k) { return ctx.inv_one_minus(3 * k - 1); });
    CycloElem rhs = (ctx.constant(1) - ctx.q(n)) * detail::frac(n, 3);
    return {std::move(lhs), std::move(rhs)};
}

inline VerificationReport verify_explicit(std::int64_t n, std::int64_t j) {
    Stopwatch sw;
    auto [lhs, rhs] = explicit_sides(n, j);
    return detail::sides_report("explicit", {{"n", n}, {"j", j}}, lhs, rhs, sw);
}

// ---------------------------------------------------------------------------
// The half-power form, checked in Q(zeta_{6n}) with h = zeta_{6n}^{j'} a square
// root of q = zeta_{3n}^j (j' == j mod 3n, gcd(j', 6n) = 1):
//
//   (-1)^{n-1}/2 sum_{k<n} h^{k(3n+2)} / (1 + h^{3k}) + 1/2 sum_{k<n} (-1)^k h^{k(3n+2)} / (1 - h^{3k})
//     + (n/3)(1 - q^n) - sum_{k <= (n+1)/2} 1/(1 - q^{3k-2}) - (2n - 1 + (-1)^n)/4  =  1/3 + (3n+1)/6 q^{2n}

/// Admissible j' in {j, j + 3n} with gcd(j', 6n) = 1.
inline std::vector<std::int64_t> half_root_choices(std::int64_t n, std::int64_t j) {
    detail::require_coprime(j, 3 * n, "main3n-new");
    std::vector<std::int64_t> out;
    for (std::int64_t c : {mod_floor(j, 3 * n), mod_floor(j, 3 * n) + 3 * n})
        if (std::gcd(c, 6 * n) == 1) out.push_back(c);
    return out;
}

inline CycloSides main3n_new_sides(std::int64_t n, std::int64_t j, std::int64_t j_half) {
    detail::require_coprime(j, 3 * n, "main3n-new");
    if (mod_floor(j_half - j, 3 * n) != 0 || std::gcd(j_half, 6 * n) != 1)
        throw std::invalid_argument("main3n-new: j_half must be a unit mod 6n congruent to j mod 3n");
    auto field = make_field(6 * n);
    auto h = [&](std::int64_t t) { return CycloElem::root_power(field, j_half * t); };
    auto q = [&](std::int64_t t) { return h(2 * t); };
    const CycloElem one(field, Rational(1));
    auto sgn = [](std::int64_t k) { return Rational(k % 2 ? -1 : 1); };
    const Rational half = detail::frac(1, 2);

    CycloElem lhs = detail::field_sum(field, 1, n - 1, [&](std::int64_t k) {
        return h(k * (3 * n + 2)) / (one + h(3 * k)) * (sgn(n - 1) * half);
    });
    lhs += detail::field_sum(field, 1, n - 1, [&](std::int64_t k) {
        return h(k * (3 * n + 2)) / (one - h(3 * k)) * (sgn(k) * half);
    });
    lhs += (one - q(n)) * detail::frac(n, 3);
    lhs -= detail::field_sum(field, 1, (n + 1) / 2, [&](std::int64_t k) { return (one - q(3 * k - 2)).inverse(); });
    lhs -= CycloElem(field, detail::frac(2 * n - 1 + (n % 2 ? -1 : 1), 4));
    CycloElem rhs = one * detail::frac(1, 3) + q(2 * n) * detail::frac(3 * n + 1, 6);
    return {std::move(lhs), std::move(rhs)};
}

inline VerificationReport verify_main3n_new(std::int64_t n, std::int64_t j, std::int64_t j_half) {
    Stopwatch sw;
    auto [lhs, rhs] = main3n_new_sides(n, j, j_half);
    return detail::sides_report("main3n-new", {{"n", n}, {"j", j}, {"j_half", j_half}}, lhs, rhs, sw);
}

inline VerificationReport verify_main3n_new(std::int64_t n, std::int64_t j) {
    return verify_main3n_new(n, j, half_root_choices(n, j).front());
}

// ---------------------------------------------------------------------------
// Parity cases. Even: n = 2N, q = zeta_{6N}^j, omega = q^N.
// Odd: n = 2N-1, q = zeta_{3(2N-1)}^j, omega = -q^{2(2N-1)}.

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// Field, q and omega of one parity case.
struct ParityContext {
    Parity parity;
    std::int64_t N;
    std::int64_t j;
    std::shared_ptr<const CycloField> field;

    ParityContext(Parity p, std::int64_t N_, std::int64_t j_) : parity(p), N(N_), j(j_) {
        if (N < 1) throw std::invalid_argument("parity case: N must be >= 1");
        const std::int64_t m = modulus();
        detail::require_coprime(j, m, p == Parity::even ? "even" : "odd");
        if (p == Parity::even && mod_floor(j, 6) != 1 && mod_floor(j, 6) != 5)
            throw std::logic_error("even case: j must be +-1 mod 6");
        field = make_field(m);
    }

    std::int64_t modulus() const { return parity == Parity::even ? 6 * N : 3 * (2 * N - 1); }
    CycloElem q(std::int64_t t = 1) const { return CycloElem::root_power(field, j * t); }
    CycloElem constant(const Rational& c) const { return CycloElem(field, c); }
    CycloElem omega() const { return parity == Parity::even ? q(N) : -q(2 * (2 * N - 1)); }
};

struct EvenOddAuxiliaries {
    CycloElem omega;
    std::array<CycloElem, 6> A;                 // A[0] = A_1, ...
    std::optional<std::array<CycloElem, 3>> B;  // even case only
    CycloElem C1;  // even: sum_{k=1}^{N} 1/(1-q^{3k-1}); odd: upper limit N-1
    CycloElem C2;  // sum_{k=1}^{N} 1/(1-q^{3k-2})
};

/// A_1..A_6, B_1..B_3 and C_1, C_2 for one parity case. A zero denominator
/// (a non-primitive configuration) raises std::domain_error.
inline EvenOddAuxiliaries compute_auxiliaries(const ParityContext& ctx) {
    const std::int64_t N = ctx.N;
    const CycloElem w = ctx.omega();
    const CycloElem one = ctx.constant(1);
    auto a_sum = [&](const CycloElem& sign_coeff) {
        return detail::field_sum(ctx.field, 1, N - 1, [&](std::int64_t k) { return (one - sign_coeff * ctx.q(k)).inverse(); });
    };
    const CycloElem w2 = w * w;
    EvenOddAuxiliaries aux{w,
                           {a_sum(one), a_sum(w), a_sum(w2), a_sum(-one), a_sum(-w), a_sum(-w2)},
                           std::nullopt,
                           one,
                           one};
    if (ctx.parity == Parity::even) {
        auto b_sum = [&](const CycloElem& c) {
            return detail::field_sum(ctx.field, 1, N, [&](std::int64_t k) { return (one - c * ctx.q(2 * k - 1)).inverse(); });
        };
        aux.B = std::array<CycloElem, 3>{b_sum(one), b_sum(w2), b_sum(-w)};
    }
    const std::int64_t c1_hi = ctx.parity == Parity::even ? N : N - 1;
    aux.C1 = detail::field_sum(ctx.field, 1, c1_hi, [&](std::int64_t k) { return (one - ctx.q(3 * k - 1)).inverse(); });
    aux.C2 = detail::field_sum(ctx.field, 1, N, [&](std::int64_t k) { return (one - ctx.q(3 * k - 2)).inverse(); });
    return aux;
}

namespace detail {

/// sum_{k=lo}^{hi} c q^{a k + b} / (1 - q^{s k + t})
inline CycloElem ratio_sum(const ParityContext& ctx, std::int64_t lo, std::int64_t hi, std::int64_t a, std::int64_t b, std::int64_t s,
                           std::int64_t t) {
    const CycloElem one = ctx.constant(1);
    return field_sum(ctx.field, lo, hi, [&](std::int64_t k) { return ctx.q(a * k + b) / (one - ctx.q(s * k + t)); });
}

/// A list of named sub-identities, each "lhs - rhs == 0".
struct NamedChecks {
    std::vector<std::pair<std::string, CycloSides>> sides;
    std::vector<std::string> failures;

    void add(std::string name, const CycloElem& lhs, const CycloElem& rhs) {
        CycloElem d = lhs - rhs;
        if (!d.is_zero()) failures.push_back(name + ": " + to_string(d));
        sides.emplace_back(std::move(name), CycloSides{lhs, rhs});
    }
    const CycloSides* find(const std::string& name) const {
        for (const auto& [n, s] : sides)
            if (n == name) return &s;
        return nullptr;
    }
    void add_bool(std::string name, bool ok) {
        if (!ok) failures.push_back(name);
    }
    std::string witness() const {
        std::string out;
        for (const auto& f : failures) out += (out.empty() ? "" : "; ") + f;
        return out;
    }
};

}  // namespace detail

// Even case: the case-(a) display and
//   w^2 S(q^k/(1-q^{6k}), k<N) + S(q^{2k-1}/(1-q^{6k-3}), k<=N) - C_2 = -N/3 (1+w) + 1/3 - w/6.

inline CycloSides even_case_display_sides(const ParityContext& ctx) {
    const std::int64_t N = ctx.N;
    CycloElem lhs = ctx.q(2 * N) * detail::ratio_sum(ctx, 1, N - 1, 1, 0, 6, 0);
    lhs += detail::ratio_sum(ctx, 1, N, 2, -1, 6, -3);
    lhs += (ctx.constant(1) - ctx.q(2 * N)) * detail::frac(2 * N, 3);
    lhs -= detail::field_sum(ctx.field, 1, N, [&](std::int64_t k) { return (ctx.constant(1) - ctx.q(3 * k - 2)).inverse(); });
    lhs -= ctx.constant(N);
    CycloElem rhs = ctx.constant(detail::frac(1, 3)) - ctx.q(N) * (Rational(N) + detail::frac(1, 6));
    return {std::move(lhs), std::move(rhs)};
}

inline CycloSides even_lemma_sides(const ParityContext& ctx) {
    const std::int64_t N = ctx.N;
    const CycloElem w = ctx.omega();
    CycloElem lhs = w * w * detail::ratio_sum(ctx, 1, N - 1, 1, 0, 6, 0);
    lhs += detail::ratio_sum(ctx, 1, N, 2, -1, 6, -3);
    lhs -= detail::field_sum(ctx.field, 1, N, [&](std::int64_t k) { return (ctx.constant(1) - ctx.q(3 * k - 2)).inverse(); });
    CycloElem rhs = (ctx.constant(1) + w) * detail::frac(-N, 3) + detail::frac(1, 3) - w * detail::frac(1, 6);
    return {std::move(lhs), std::move(rhs)};
}

inline VerificationReport verify_even_case(std::int64_t N, std::int64_t j) {
    Stopwatch sw;
    ParityContext ctx(Parity::even, N, j);
    detail::NamedChecks checks;
    auto [dl, dr] = even_case_display_sides(ctx);
    checks.add("case-a display", dl, dr);
    auto [ll, lr] = even_lemma_sides(ctx);
    checks.add("even lemma", ll, lr);
    Params params{{"N", N}, {"j", j}};
    if (checks.failures.empty()) return make_pass("even", params, sw);
    return make_fail("even", params, checks.witness(), sw);
}

// Odd case: the case-(b) display and
//   w^2 S(q^k/(1-q^{6k}), k<N) + S(q^{2k}/(1-q^{6k}), k<N) - C_2 = -N/3 (1+w).

inline CycloSides odd_case_display_sides(const ParityContext& ctx) {
    const std::int64_t N = ctx.N;
    CycloElem lhs = ctx.q(2 * N - 1) * detail::ratio_sum(ctx, 1, N - 1, 1, 0, 6, 0);
    lhs += detail::ratio_sum(ctx, 1, N - 1, 2, 0, 6, 0);
    lhs += (ctx.constant(1) - ctx.q(2 * N - 1)) * detail::frac(2 * N - 1, 3);
    lhs -= detail::field_sum(ctx.field, 1, N, [&](std::int64_t k) { return (ctx.constant(1) - ctx.q(3 * k - 2)).inverse(); });
    lhs -= ctx.constant(N - 1);
    CycloElem rhs = ctx.constant(detail::frac(1, 3)) + ctx.q(2 * (2 * N - 1)) * (Rational(N) - detail::frac(1, 3));
    return {std::move(lhs), std::move(rhs)};
}

inline CycloSides odd_lemma_sides(const ParityContext& ctx) {
    const std::int64_t N = ctx.N;
    const CycloElem w = ctx.omega();
    CycloElem lhs = w * w * detail::ratio_sum(ctx, 1, N - 1, 1, 0, 6, 0);
    lhs += detail::ratio_sum(ctx, 1, N - 1, 2, 0, 6, 0);
    lhs -= detail::field_sum(ctx.field, 1, N, [&](std::int64_t k) { return (ctx.constant(1) - ctx.q(3 * k - 2)).inverse(); });
    CycloElem rhs = (ctx.constant(1) + w) * detail::frac(-N, 3);
    return {std::move(lhs), std::move(rhs)};
}

inline VerificationReport verify_odd_case(std::int64_t N, std::int64_t j) {
    Stopwatch sw;
    ParityContext ctx(Parity::odd, N, j);
    detail::NamedChecks checks;
    auto [dl, dr] = odd_case_display_sides(ctx);
    checks.add("case-b display", dl, dr);
    auto [ll, lr] = odd_lemma_sides(ctx);
    checks.add("odd lemma", ll, lr);
    Params params{{"N", N}, {"j", j}};
    if (checks.failures.empty()) return make_pass("odd", params, sw);
    return make_fail("odd", params, checks.witness(), sw);
}

/// {k} u {2N-1-k} versus {2k} u {2N-1-2k} over 1 <= k <= N-1, as multisets.
inline bool set_identity_holds(std::int64_t N) {
    std::vector<std::int64_t> left, right;
    for (std::int64_t k = 1; k <= N - 1; ++k) {
        left.push_back(k);
        left.push_back(2 * N - 1 - k);
        right.push_back(2 * k);
        right.push_back(2 * N - 1 - 2 * k);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return left == right;
}

/// Every intermediate identity of the parity proofs, by name.
inline detail::NamedChecks auxiliary_checks(std::int64_t N, std::int64_t j, Parity parity) {
    ParityContext ctx(parity, N, j);
    const auto aux = compute_auxiliaries(ctx);
    const auto& A = aux.A;
    const CycloElem& w = aux.omega;
    const CycloElem w2 = w * w;
    const CycloElem one = ctx.constant(1);
    auto r = [&](std::int64_t a, std::int64_t b) { return ctx.constant(detail::frac(a, b)); };
    detail::NamedChecks c;

    c.add("omega: 1 - w + w^2 = 0", one - w + w2, r(0, 1));
    c.add("omega: w^3 = -1", w2 * w, r(-1, 1));

    if (parity == Parity::even) {
        const auto& B = *aux.B;
        c.add("B2 = N/2", B[1], r(N, 2));
        c.add("B1 + B3 = N", B[0] + B[2], r(N, 1));
        for (int l = 1; l <= 3; ++l)
            c.add("A" + std::to_string(l) + " + A" + std::to_string(7 - l) + " = N-1", A[l - 1] + A[6 - l], r(N - 1, 1));
        c.add("(i) pfd6 sum", detail::ratio_sum(ctx, 1, N - 1, 1, 0, 6, 0) * Rational(6),
              A[0] - w2 * A[1] - w * A[2] - A[3] + w2 * A[4] + w * A[5]);
        const CycloElem s3 = detail::ratio_sum(ctx, 1, N, 2, -1, 6, -3) * Rational(3);
        c.add("(ii) pfd3 sum", s3, B[0] - w * B[1] + w2 * B[2]);
        c.add("(ii) collapsed", s3, (r(2, 1) - w) * (B[0] - r(N, 2)));
        c.add("B1 in terms of A", B[0], A[0] * detail::frac(1, 2) + A[1] - A[3] * detail::frac(1, 2) + w);
        c.add("C1 + C2", aux.C1 + aux.C2,
              A[0] * detail::frac(2, 3) + A[1] + A[2] * detail::frac(2, 3) - A[4] * detail::frac(1, 3) + (w * Rational(4) + Rational(1)) * detail::frac(1, 3));
        c.add("explicit split", (one - ctx.q(2 * N)) * detail::frac(2 * N, 3), aux.C1 + Rational(N) - aux.C2);
        c.add("C2 in terms of A", aux.C2,
              A[0] * detail::frac(1, 3) + A[1] * detail::frac(1, 2) + A[2] * detail::frac(1, 3) - A[4] * detail::frac(1, 6) +
                  (w * Rational(4) + Rational(1)) * detail::frac(1, 6) + (w * Rational(2) - Rational(1)) * detail::frac(N, 6));
        const CycloElem a25 = A[1] + A[4];
        c.add("reduced form", -(A[0] + A[5]) + a25 - (A[2] + A[3]) + Rational(N - 1) - w * (a25 - Rational(N - 1)), r(0, 1));
        return c;
    }

    // odd case
    c.add("w^2 = q^(2N-1)", w2, ctx.q(2 * N - 1));
    c.add("(i) pfd6 sum", ctx.q(2 * N - 1) * detail::ratio_sum(ctx, 1, N - 1, 1, 0, 6, 0) * Rational(6),
          w2 * (A[0] - A[3] - w * (A[2] - A[5]) + w2 * (A[4] - A[1])));
    c.add("(ii) pfd3 sum", detail::ratio_sum(ctx, 1, N - 1, 2, 0, 6, 0) * Rational(6),
          A[0] + A[3] - w * (A[1] + A[4]) + w2 * (A[2] + A[5]));
    c.add("(iii) C1 + C2", aux.C1 + aux.C2,
          A[0] * detail::frac(2, 3) + A[2] * detail::frac(2, 3) - A[4] * detail::frac(4, 3) + Rational(N) - (r(2, 1) - w) * detail::frac(1, 3));
    c.add("(iii) explicit split", (one - ctx.q(2 * N - 1)) * detail::frac(2 * N - 1, 3), aux.C1 + Rational(N) - aux.C2);
    c.add("(iii) 6 C2", aux.C2 * Rational(6),
          A[0] * Rational(2) + A[2] * Rational(2) - A[4] * Rational(4) + Rational(6 * N) + w - Rational(2) +
              (w2 - Rational(1)) * Rational(2 * N - 1));
    c.add("(odd2)", A[0] + A[2] - A[3] - A[4] * Rational(2) + A[5], r(0, 1));

    // 3x(1-x)/(1+x^3) = -2/(1+x) + 1/(1-wx) + 1/(1+w^2 x); summed at x = c q^k.
    auto cube_sum = [&](const CycloElem& c0) {
        return detail::field_sum(ctx.field, 1, N - 1, [&](std::int64_t k) {
            CycloElem x = c0 * ctx.q(k);
            return x * (one - x) / (one + x * x * x);
        });
    };
    const CycloElem f1 = cube_sum(one), fw = cube_sum(w), fw2 = cube_sum(w2);
    c.add("cube pfd at q^k", f1 * Rational(3), A[5] + A[1] - A[3] * Rational(2));
    c.add("cube pfd at w q^k", fw * Rational(3), A[0] + A[2] - A[4] * Rational(2));
    c.add("cube pfd at w^2 q^k", fw2 * Rational(3), A[1] + A[3] - A[5] * Rational(2));
    c.add("(odd3)", f1 + fw * Rational(3) - fw2, r(0, 1));
    c.add("1 + (w q^k)^3 = 1 - q^{3k}", one + w * w2 * ctx.q(3), one - ctx.q(3));

    const CycloElem odd4 = detail::field_sum(ctx.field, 1, N - 1, [&](std::int64_t k) {
        return ctx.q(k) * (one + w * ctx.q(3 * k)) * (one - w * ctx.q(k)) / (one - ctx.q(6 * k));
    });
    c.add("(odd4)", odd4, r(0, 1));

    // Summand rewrites used on the way to the final equality and the trigonometric form.
    detail::NamedChecks rewrite;
    for (std::int64_t k = 1; k <= N - 1; ++k) {
        const CycloElem z = ctx.q(k);
        const CycloElem summand = z * (one + w * ctx.q(3 * k)) * (one - w * z) / (one - ctx.q(6 * k));
        const CycloElem factor = (one - w2) * detail::frac(1, 3);
        const CycloElem via_w = factor * ((one - ctx.q(-2 * k)).inverse() + (one + w * ctx.q(2 * k)).inverse() -
                                          (one - ctx.q(-k)).inverse() - (one + w * z).inverse());
        const CycloElem via_q = factor * ((one - ctx.q(-2 * k)).inverse() + (one - ctx.q(-(2 * N - 1 - 2 * k))).inverse() -
                                          (one - ctx.q(-k)).inverse() - (one - ctx.q(-(2 * N - 1 - k))).inverse());
        const CycloElem trig = factor * (z / (one - ctx.q(2 * k)) - (one + w * z).inverse() + (one + w * ctx.q(2 * k)).inverse());
        rewrite.add("k=" + std::to_string(k) + " pfd in w", summand, via_w);
        rewrite.add("k=" + std::to_string(k) + " pfd in q", summand, via_q);
        rewrite.add("k=" + std::to_string(k) + " trig form", summand, trig);
    }
    c.add_bool("odd4 summand rewrites {" + rewrite.witness() + "}", rewrite.failures.empty());

    auto inv_sum = [&](std::int64_t lo, std::int64_t hi, std::int64_t s, std::int64_t t) {
        return detail::field_sum(ctx.field, lo, hi, [&](std::int64_t k) { return (one - ctx.q(s * k + t)).inverse(); });
    };
    c.add("final equality", inv_sum(1, N - 1, -2, 0) + inv_sum(1, N - 1, 2, -2 * N + 1),
          inv_sum(1, N - 1, -1, 0) + inv_sum(1, N - 1, 1, -2 * N + 1));
    c.add("final equality (reindexed)", inv_sum(1, N - 1, -2, 0) + inv_sum(1, N - 1, -2, 1),
          inv_sum(1, N - 1, -1, 0) + inv_sum(N, 2 * N - 2, -1, 0));
    c.add("both sides = full sum", inv_sum(1, N - 1, -2, 0) + inv_sum(1, N - 1, -2, 1), inv_sum(1, 2 * N - 2, -1, 0));
    c.add_bool("set-theoretic identity", set_identity_holds(N));
    return c;
}

inline VerificationReport verify_aux_properties(std::int64_t N, std::int64_t j, Parity parity) {
    Stopwatch sw;
    auto checks = auxiliary_checks(N, j, parity);
    Params params{{"N", N}, {"j", j}, {"odd", parity == Parity::odd ? 1 : 0}};
    if (checks.failures.empty()) return make_pass("aux", params, sw);
    return make_fail("aux", params, checks.witness(), sw);
}

// ---------------------------------------------------------------------------
// Partial fractions over Q(zeta_6)(x), w = zeta_6, checked at rational x.

enum class PfdKind { pfd3, pfd6, cube };

inline const char* to_string(PfdKind k) {
    switch (k) {
        case PfdKind::pfd3: return "pfd3";
        case PfdKind::pfd6: return "pfd6";
        case PfdKind::cube: return "cube";
    }
    return "?";
}

/// Both sides at x. The cube decomposition is 3x(1-x)/(1+x^3) = -2/(1+x) + 1/(1-wx) + 1/(1+w^2 x);
/// `cube_scale` lets the unscaled form be probed as well.
inline CycloSides pfd_sides(PfdKind kind, const Rational& x, const Rational& cube_scale = Rational(3)) {
    auto field = make_field(6);
    const CycloElem w = CycloElem::root_power(field, 1);
    const CycloElem w2 = w * w;
    const CycloElem one(field, Rational(1));
    const CycloElem X(field, x);
    auto inv = [](const CycloElem& e) { return e.inverse(); };
    switch (kind) {
        case PfdKind::pfd6: {
            CycloElem lhs = CycloElem(field, Rational(6) * x / (Rational(1) - x.pow(6)));
            CycloElem rhs = inv(one - X) - w * inv(one - w2 * X) + w2 * inv(one + w * X) - inv(one + X) + w * inv(one + w2 * X) -
                            w2 * inv(one - w * X);
            return {lhs, rhs};
        }
        case PfdKind::pfd3: {
            CycloElem lhs = CycloElem(field, Rational(3) * x / (Rational(1) - x.pow(3)));
            CycloElem rhs = inv(one - X) - w * inv(one - w2 * X) + w2 * inv(one + w * X);
            return {lhs, rhs};
        }
        case PfdKind::cube: {
            CycloElem lhs = CycloElem(field, cube_scale * x * (Rational(1) - x) / (Rational(1) + x.pow(3)));
            CycloElem rhs = inv(one + X) * Rational(-2) + inv(one - w * X) + inv(one + w2 * X);
            return {lhs, rhs};
        }
    }
    throw std::invalid_argument("pfd: unknown kind");
}

/// 24 rational sample points, none of them +-1.
inline std::vector<Rational> pfd_sample_points() {
    std::vector<Rational> pts;
    for (std::int64_t i = 2; i <= 13; ++i) {
        pts.emplace_back(i);
        pts.push_back(detail::frac(1, i));
    }
    pts.push_back(detail::frac(5, 7));
    pts.push_back(detail::frac(-3, 4));
    return pts;
}

inline VerificationReport verify_pfd(PfdKind kind) {
    Stopwatch sw;
    const auto pts = pfd_sample_points();
    std::int64_t agreements = 0;
    for (const auto& x : pts) {
        auto [lhs, rhs] = pfd_sides(kind, x);
        CycloElem d = lhs - rhs;
        if (!d.is_zero())
            return make_fail(std::string("pfd"), {{"kind", static_cast<std::int64_t>(kind)}, {"points", agreements}},
                             "x = " + x.to_string() + ": " + to_string(d), sw);
        ++agreements;
    }
    auto rep = make_pass("pfd", {{"kind", static_cast<std::int64_t>(kind)}, {"points", agreements}}, sw);
    rep.note = to_string(kind);
    return rep;
}

// ---------------------------------------------------------------------------
// sum_{k=1}^{N-1} csc(2kx) + cot((2N-1-k)x) - cot((2N-1-2k)x) = 0, x = pi/(6N-3), in doubles.

namespace detail {

inline double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

}  // namespace detail

inline double trig_identity_sum(std::int64_t N) {
    if (N < 2) throw std::invalid_argument("trig: N must be >= 2");
    const double x = std::numbers::pi / static_cast<double>(6 * N - 3);
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(3 * (N - 1)));
    for (std::int64_t k = 1; k <= N - 1; ++k) {
        const std::int64_t c = 2 * N - 1 - 2 * k;
        if (c <= 0) throw std::logic_error("trig: cot argument vanishes");
        terms.push_back(1.0 / std::sin(static_cast<double>(2 * k) * x));
        terms.push_back(1.0 / std::tan(static_cast<double>(2 * N - 1 - k) * x));
        terms.push_back(-1.0 / std::tan(static_cast<double>(c) * x));
    }
    return detail::pairwise_sum(terms.data(), terms.size());
}

inline VerificationReport verify_trig_identity(std::int64_t N, double tol) {
    Stopwatch sw;
    if (!(tol > 0)) throw std::invalid_argument("trig: tolerance must be positive");
    const double s = trig_identity_sum(N);
    if (std::abs(s) < tol) return make_pass("trig", {{"N", N}}, sw);
    char buf[64];
    std::snprintf(buf, sizeof buf, "|sum| = %.3e", std::abs(s));
    return make_fail("trig", {{"N", N}}, buf, sw);
}

// ---------------------------------------------------------------------------
// 1/(1 - q^{6k}) = -1/(2N-1) sum_{i=0}^{2N-2} i q^{6ik}, q = zeta_{3(2N-1)}^j, (2N-1) not dividing k.

inline CycloSides sawtooth_sides(std::int64_t N, std::int64_t j, std::int64_t k) {
    if (N < 1) throw std::invalid_argument("sawtooth: N must be >= 1");
    const std::int64_t p = 2 * N - 1;
    const std::int64_t m = 3 * p;
    detail::require_coprime(j, m, "sawtooth");
    if (k % p == 0) throw std::invalid_argument("sawtooth: 2N-1 divides k");
    if ((2 * k) % p == 0) throw std::logic_error("sawtooth: q^{6k} = 1");
    auto field = make_field(m);
    auto q = [&](std::int64_t t) { return CycloElem::root_power(field, j * t); };
    const CycloElem one(field, Rational(1));
    CycloElem lhs = (one - q(6 * k)).inverse();
    CycloElem rhs = detail::field_sum(field, 0, p - 1, [&](std::int64_t i) { return q(6 * i * k) * Rational(i); }) * detail::frac(-1, p);
    return {std::move(lhs), std::move(rhs)};
}

inline VerificationReport verify_sawtooth(std::int64_t N, std::int64_t j, std::int64_t k) {
    Stopwatch sw;
    auto [lhs, rhs] = sawtooth_sides(N, j, k);
    return detail::sides_report("sawtooth", {{"N", N}, {"j", j}, {"k", k}}, lhs, rhs, sw);
}

}  // namespace qcat

#endif  // QCATALAN_ROOTID_HPP
