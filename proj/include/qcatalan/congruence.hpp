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

#ifndef QCATALAN_CONGRUENCE_HPP
#define QCATALAN_CONGRUENCE_HPP

// Polynomial congruence suites. Every claim "A == B (mod Phi_n(q)^e)" is
// checked as "remainder of A - B is the zero polynomial".
//
// Exponent normalization: negative q-exponents only ever appear multiplied by
// (q^n - 1) (modulus Phi_n^2) or under modulus Phi_n, where q^n == 1 makes
// reduction of the exponent mod n legitimate. Each suite notes what it does.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "qcatalan/cyclotomic.hpp"
#include "qcatalan/qcomb.hpp"
#include "qcatalan/report.hpp"
#include "qcatalan/ring.hpp"

namespace qcat {

struct PolySides {
    Poly lhs;
    Poly rhs;
};

namespace detail {

inline Poly qpow(std::int64_t e) {
    if (e < 0) throw std::logic_error("negative q-exponent " + std::to_string(e) + " reached a polynomial");
    return Poly::monomial(1, static_cast<std::size_t>(e));
}

/// q^n - 1
inline Poly qn_minus_one(std::int64_t n) { return qpow(n) - Poly::constant(1); }

/// num / 3, asserting exactness; the exponents are integers only under
/// residue hypotheses and a silent rounding would hide a wrong branch.
inline std::int64_t exact_third(std::int64_t num, const char* what) {
    if (num % 3 != 0) throw std::logic_error(std::string(what) + ": exponent " + std::to_string(num) + "/3 is not integral");
    return num / 3;
}

inline VerificationReport congruence_report(std::string suite, Params params, const Poly& lhs, const Poly& rhs,
                                            std::int64_t n, int e, const Stopwatch& sw) {
    Poly residue = reduce_mod_phi_power(lhs - rhs, n, e);
    if (residue.is_zero()) return make_pass(std::move(suite), std::move(params), sw);
    return make_fail(std::move(suite), std::move(params), to_string(residue), sw);
}

}  // namespace detail

/// Generic engine: pass iff lhs == rhs (mod Phi_n^e), e in {1, 2}.
inline VerificationReport check_congruence(const Poly& lhs, const Poly& rhs, std::int64_t n, int e) {
    Stopwatch sw;
    if (n < 1) throw std::invalid_argument("check_congruence: n must be >= 1");
    if (e != 1 && e != 2) throw std::invalid_argument("check_congruence: e must be 1 or 2");
    return detail::congruence_report("congruence", {{"n", n}, {"e", e}}, lhs, rhs, n, e, sw);
}

/// Calls visit(n, S_n) for n in [lo, hi] with S_n = sum_{k<n} q^k C_k(q), built incrementally.
inline void for_each_catalan_sum(std::int64_t lo, std::int64_t hi, const std::function<void(std::int64_t, const Poly&)>& visit) {
    Poly total;
    CatalanSequence seq;
    for (std::int64_t n = 1; n <= hi; ++n, seq.advance()) {
        total += seq.current().shifted(static_cast<std::size_t>(n - 1));
        if (n >= lo) visit(n, total);
    }
}

/// Calls visit(n, sum_{k<n} q^k [2k, k]) for n in [lo, hi].
inline void for_each_central_sum(std::int64_t lo, std::int64_t hi, const std::function<void(std::int64_t, const Poly&)>& visit) {
    Poly total;
    CentralBinomials seq;
    for (std::int64_t n = 1; n <= hi; ++n, seq.advance()) {
        total += seq.current().shifted(static_cast<std::size_t>(n - 1));
        if (n >= lo) visit(n, total);
    }
}

// ---------------------------------------------------------------------------
// S_n mod Phi_n

inline Poly tauraso_mod_phi_rhs(std::int64_t n) {
    if (n % 3 == 2) return -Poly::constant(1) - detail::qpow(detail::exact_third(2 * n - 1, "tauraso-phi"));
    return detail::qpow(n / 3);
}

inline VerificationReport verify_tauraso_mod_phi(std::int64_t n, const Poly& catalan_sum_n) {
    Stopwatch sw;
    if (n < 2) throw std::invalid_argument("verify_tauraso_mod_phi: n must be >= 2");
    return detail::congruence_report("tauraso-phi", {{"n", n}}, catalan_sum_n, tauraso_mod_phi_rhs(n), n, 1, sw);
}

inline VerificationReport verify_tauraso_mod_phi(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("verify_tauraso_mod_phi: n must be >= 2");
    return verify_tauraso_mod_phi(n, catalan_sum(n));
}

// ---------------------------------------------------------------------------
// S_n mod Phi_n^2, n not divisible by 3

inline Poly liu_mod_phi2_rhs(std::int64_t n) {
    if (n % 3 == 0) throw std::invalid_argument("liu-phi2: n = " + std::to_string(n) + " is divisible by 3; use main-phi2");
    const std::int64_t e1 = detail::exact_third(n * n - 1, "liu-phi2");
    if (n % 3 == 1)
        return detail::qpow(e1) - detail::qn_minus_one(n) * Rational(mpz_class(n - 1), mpz_class(3));
    return -detail::qpow(e1) - detail::qpow(detail::exact_third(n * (2 * n - 1), "liu-phi2"));
}

inline VerificationReport verify_liu_mod_phi2(std::int64_t n, const Poly& catalan_sum_n) {
    Stopwatch sw;
    if (n < 2) throw std::invalid_argument("verify_liu_mod_phi2: n must be >= 2");
    Poly rhs = liu_mod_phi2_rhs(n);
    return detail::congruence_report("liu-phi2", {{"n", n}}, catalan_sum_n, rhs, n, 2, sw);
}

inline VerificationReport verify_liu_mod_phi2(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("verify_liu_mod_phi2: n must be >= 2");
    liu_mod_phi2_rhs(n);  // precondition before the expensive part
    return verify_liu_mod_phi2(n, catalan_sum(n));
}

// ---------------------------------------------------------------------------
// S_n mod Phi_n^2, 3 | n

/// q^{n(2n+1)/3} + (1/3)(q^n - 1)(2 + (n+1) q^{2n/3}).
inline Poly main_theorem_rhs(std::int64_t n) {
    if (n < 3 || n % 3 != 0) throw std::invalid_argument("main-phi2: n must be a positive multiple of 3");
    Poly inner = Poly::constant(2) + detail::qpow(2 * n / 3) * Rational(n + 1);
    return detail::qpow(detail::exact_third(n * (2 * n + 1), "main-phi2")) +
           detail::qn_minus_one(n) * inner * Rational(mpz_class(1), mpz_class(3));
}

inline VerificationReport verify_main_theorem(std::int64_t n, const Poly& catalan_sum_n) {
    Stopwatch sw;
    Poly rhs = main_theorem_rhs(n);
    return detail::congruence_report("main-phi2", {{"n", n}}, catalan_sum_n, rhs, n, 2, sw);
}

inline VerificationReport verify_main_theorem(std::int64_t n) {
    main_theorem_rhs(n);
    return verify_main_theorem(n, catalan_sum(n));
}

// ---------------------------------------------------------------------------
// Central binomial sum: sum_{k<n} q^k [2k,k] == (n/3) q^{(n^2-1)/3} (mod Phi_n^2)

inline Poly central_sum(std::int64_t n) {
    Poly total;
    for (std::int64_t k = 0; k < n; ++k) total += gaussian_binomial(2 * k, k).shifted(static_cast<std::size_t>(k));
    return total;
}

/// Zero when 3 | n: the Legendre factor vanishes before the fractional exponent is formed.
inline Poly liu_petrov_rhs(std::int64_t n) {
    const int leg = legendre3(n);
    if (leg == 0) return {};
    return detail::qpow(detail::exact_third(n * n - 1, "liu-petrov")) * Rational(leg);
}

inline VerificationReport verify_liu_petrov(std::int64_t n, const Poly& central_sum_n) {
    Stopwatch sw;
    if (n < 2) throw std::invalid_argument("verify_liu_petrov: n must be >= 2");
    return detail::congruence_report("liu-petrov", {{"n", n}}, central_sum_n, liu_petrov_rhs(n), n, 2, sw);
}

inline VerificationReport verify_liu_petrov(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("verify_liu_petrov: n must be >= 2");
    return verify_liu_petrov(n, central_sum(n));
}

// ---------------------------------------------------------------------------
// Split sum: exact identity
//   sum_{k=0}^{n-1} q^{k+1} [2k,k+1] = sum_{k=1}^{n} ((k-1)/3) q^{(2k^2 - k((k-1)/3))/3} [2n,n+k]

inline Poly tauraso13_lhs(std::int64_t n) {
    Poly total;
    for (std::int64_t k = 0; k < n; ++k) total += gaussian_binomial(2 * k, k + 1).shifted(static_cast<std::size_t>(k + 1));
    return total;
}

/// Exponent (2k^2 - k (k-1 / 3)) / 3 of the k-th right-hand term, asserted integral.
inline std::int64_t tauraso13_exponent(std::int64_t k) {
    const std::int64_t e = detail::exact_third(2 * k * k - k * legendre3(k - 1), "tauraso13");
    if (e < 0) throw std::logic_error("tauraso13: negative exponent");
    return e;
}

inline Poly tauraso13_rhs(std::int64_t n) {
    Poly total;
    for (std::int64_t k = 1; k <= n; ++k) {
        const int leg = legendre3(k - 1);
        if (leg == 0) continue;
        total += gaussian_binomial(2 * n, n + k).shifted(static_cast<std::size_t>(tauraso13_exponent(k))) * Rational(leg);
    }
    return total;
}

inline VerificationReport verify_tauraso13_identity(std::int64_t n) {
    Stopwatch sw;
    if (n < 1) throw std::invalid_argument("verify_tauraso13_identity: n must be >= 1");
    Poly diff = tauraso13_lhs(n) - tauraso13_rhs(n);
    if (diff.is_zero()) return make_pass("tauraso13", {{"n", n}}, sw);
    return make_fail("tauraso13", {{"n", n}}, to_string(diff), sw);
}

// ---------------------------------------------------------------------------
// q-Lucas: [an+b, cn+d] == binom(a,c) [b,d] (mod Phi_n)

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r.get_si();
}

inline VerificationReport verify_lucas_qbinom(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n) {
    Stopwatch sw;
    if (n < 2) throw std::invalid_argument("verify_lucas_qbinom: n must be >= 2");
    if (a < 0 || c < 0 || b < 0 || d < 0 || b >= n || d >= n)
        throw std::invalid_argument("verify_lucas_qbinom: need a, c >= 0 and 0 <= b, d < n");
    Poly lhs = gaussian_binomial(a * n + b, c * n + d);
    Poly rhs = gaussian_binomial(b, d) * Rational(binomial(a, c));
    return detail::congruence_report("lucas", {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"n", n}}, lhs, rhs, n, 1, sw);
}

// ---------------------------------------------------------------------------
// [2n, n+k] == (q^n - 1) 2 (-1)^k q^{-k(k-1)/2} / (1 - q^k) (mod Phi_n^2), 1 <= k < n.
// Checked as [2n,n+k] (1 - q^k) == 2 (-1)^k (q^n - 1) q^{(-k(k-1)/2) mod n}; the
// factor (1 - q^k) is a unit mod Phi_n^2 because n does not divide k, and the
// exponent shift by a multiple of n changes the right side by a multiple of (q^n-1)^2.

inline PolySides central_qbinom_sides(std::int64_t n, std::int64_t k) {
    if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("central-binom: need n >= 2 and 1 <= k <= n-1");
    Poly lhs = detail::mul_one_minus_qpow(gaussian_binomial(2 * n, n + k), static_cast<std::size_t>(k));
    const std::int64_t e = mod_floor(-k * (k - 1) / 2, n);
    Poly rhs = (detail::qn_minus_one(n) * detail::qpow(e)) * Rational(k % 2 == 0 ? 2 : -2);
    return {std::move(lhs), std::move(rhs)};
}

inline VerificationReport verify_central_qbinom_congruence(std::int64_t n, std::int64_t k) {
    Stopwatch sw;
    auto [lhs, rhs] = central_qbinom_sides(n, k);
    return detail::congruence_report("central-binom", {{"n", n}, {"k", k}}, lhs, rhs, n, 2, sw);
}

// [n-1, k-1] == (-1)^{k-1} q^{-k(k-1)/2} (mod Phi_n), checked as
// [n-1, k-1] q^{k(k-1)/2 mod n} == (-1)^{k-1}; q^n == 1 mod Phi_n.

inline PolySides row_qbinom_sides(std::int64_t n, std::int64_t k) {
    if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("row-binom: need n >= 2 and 1 <= k <= n-1");
    Poly lhs = gaussian_binomial(n - 1, k - 1).shifted(static_cast<std::size_t>(mod_floor(k * (k - 1) / 2, n)));
    Poly rhs = Poly::constant(k % 2 == 1 ? 1 : -1);
    return {std::move(lhs), std::move(rhs)};
}

inline VerificationReport verify_row_qbinom_congruence(std::int64_t n, std::int64_t k) {
    Stopwatch sw;
    auto [lhs, rhs] = row_qbinom_sides(n, k);
    return detail::congruence_report("row-binom", {{"n", n}, {"k", k}}, lhs, rhs, n, 1, sw);
}

// ---------------------------------------------------------------------------
// The reduction chain from the split-sum identity to the root-of-unity sums.
//
// With T_k = ((k-1)/3) q^{e_k} [2n,n+k] the identity's right side is
// sum_{k=1}^{n} T_k. The k = n term is [2n,2n] = 1 times a monomial and does not
// vanish mod Phi_n^2, while the k = 0 term -[2n,n] is not 0 mod Phi_n^2 either,
// so the chain is checked with index range 1..n and the n-th term kept:
//
//   sum_{k<n} q^{k+1}[2k,k+1] == T_n + 2(q^n-1) sum_{k=1}^{n-1} ((k-1)/3) q^{e_k} (-1)^k q^{-k(k-1)/2} / (1-q^k)
//                            == T_n - 2(q^n-1) M_n                         (mod Phi_n^2)
//
// M_n = sum_{k<=n/3} (-1)^k q^{k(3k-1)/2}/(1-q^{3k-1}) + sum_{k<=(n-1)/3} (-1)^k q^{k(3k+5)/2}/(1-q^{3k}).
// Both sums sit behind the factor (q^n - 1), so they only matter mod Phi_n and
// are evaluated with inverses mod Phi_n.

namespace detail {

/// Residue mod Phi_n of q^e / (1 - q^a), n not dividing a; e reduced mod n.
inline Poly monomial_over_one_minus(std::int64_t n, std::int64_t e, std::int64_t a) {
    const Poly& phi = cyclotomic_poly(n);
    Poly denom = Poly::constant(1) - qpow(mod_floor(a, n));
    auto inv = inverse_mod(denom, phi);
    if (!inv) throw std::logic_error("reduction chain: 1 - q^" + std::to_string(a) + " is not a unit mod Phi_" + std::to_string(n));
    return (qpow(mod_floor(e, n)) * *inv) % phi;
}

inline Poly chain_last_term(std::int64_t n) {
    const int leg = legendre3(n - 1);
    if (leg == 0) return {};
    return qpow(tauraso13_exponent(n)) * Rational(leg);
}

}  // namespace detail

/// M_n mod Phi_n.
inline Poly chain_root_sums(std::int64_t n) {
    Poly total;
    for (std::int64_t k = 1; k <= n / 3; ++k)
        total += detail::monomial_over_one_minus(n, k * (3 * k - 1) / 2, 3 * k - 1) * Rational(k % 2 ? -1 : 1);
    for (std::int64_t k = 1; k <= (n - 1) / 3; ++k)
        total += detail::monomial_over_one_minus(n, k * (3 * k + 5) / 2, 3 * k) * Rational(k % 2 ? -1 : 1);
    return total;
}

inline VerificationReport verify_reduction_chain(std::int64_t n) {
    Stopwatch sw;
    if (n < 2) throw std::invalid_argument("verify_reduction_chain: n must be >= 2");
    const Poly lhs = tauraso13_lhs(n);
    const Poly last = detail::chain_last_term(n);

    Poly middle;
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        const int leg = legendre3(k - 1);
        if (leg == 0) continue;
        const std::int64_t e = tauraso13_exponent(k) - k * (k - 1) / 2;
        middle += detail::monomial_over_one_minus(n, e, k) * Rational(k % 2 ? -leg : leg);
    }
    const Poly middle_form = last + detail::qn_minus_one(n) * middle * Rational(2);
    const Poly final_form = last - detail::qn_minus_one(n) * chain_root_sums(n) * Rational(2);

    // The literal index range 0..n-1 (dropping T_n, adding T_0 = -[2n,n]).
    Poly literal = tauraso13_rhs(n) - last - gaussian_binomial(2 * n, n);
    const bool literal_holds = reduce_mod_phi_power(lhs - literal, n, 2).is_zero();

    Params params{{"n", n}};
    Poly r1 = reduce_mod_phi_power(lhs - middle_form, n, 2);
    Poly r2 = reduce_mod_phi_power(lhs - final_form, n, 2);
    VerificationReport rep = [&] {
        if (!r1.is_zero()) return make_fail("reduction-chain", params, "middle form: " + to_string(r1), sw);
        if (!r2.is_zero()) return make_fail("reduction-chain", params, "final form: " + to_string(r2), sw);
        return make_pass("reduction-chain", params, sw);
    }();
    rep.note = std::string("index range 0..n-1 without the k=n term: ") + (literal_holds ? "holds" : "does not hold");
    return rep;
}

}  // namespace qcat

#endif  // QCATALAN_CONGRUENCE_HPP
