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

#ifndef QCATALAN_CYCLOTOMIC_HPP
#define QCATALAN_CYCLOTOMIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcatalan/ring.hpp"

namespace qcat {

/// Euler's totient by trial division.
inline std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Non-negative residue of a mod m.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

namespace detail {

class CyclotomicTable {
  public:
    const Poly& get(std::int64_t n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(n); it != table_.end()) return it->second;
        }
        // Divisors first, without holding the lock across the recursion.
        Poly p = Poly::monomial(1, static_cast<std::size_t>(n)) - Poly::constant(1);
        for (std::int64_t d = 1; d < n; ++d) {
            if (n % d) continue;
            auto [quot, rem] = divrem(p, get(d));
            if (!rem.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
            p = std::move(quot);
        }
        std::unique_lock lock(mutex_);
        // A concurrent writer may have won; both computed the same value.
        return table_.try_emplace(n, std::move(p)).first->second;
    }

  private:
    std::shared_mutex mutex_;
    std::map<std::int64_t, Poly> table_;  // node-based: references stay valid
};

inline CyclotomicTable& cyclotomic_table() {
    static CyclotomicTable table;
    return table;
}

}  // namespace detail

/// Phi_n(q), computed as (q^n - 1) / prod_{d | n, d < n} Phi_d(q) and memoized.
inline const Poly& cyclotomic_poly(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
    return detail::cyclotomic_table().get(n);
}

/// Remainder of p modulo Phi_n(q)^e.
///
/// p is first folded modulo (q^n - 1)^e, a sparse multiple of Phi_n^e, so the
/// dense division only ever sees a polynomial of degree < e*n.
inline Poly reduce_mod_phi_power(const Poly& p, std::int64_t n, int e) {
    if (n < 1 || e < 1) throw std::invalid_argument("reduce_mod_phi_power: need n >= 1, e >= 1");
    if (p.is_zero()) return {};
    const Poly base = Poly::monomial(1, static_cast<std::size_t>(n)) - Poly::constant(1);
    Poly folded = p;
    if (p.degree() >= e * n) folded = p % pow(base, static_cast<unsigned>(e));
    return folded % pow(cyclotomic_poly(n), static_cast<unsigned>(e));
}

/**
 * The number field Q(zeta_m) presented as Q[x]/Phi_m(x).
 *
 * Holds the reduced residues of x^0 .. x^(m-1) so that root powers are table
 * lookups. Built per check and shared by the elements of that check.
 */
class CycloField {
  public:
    explicit CycloField(std::int64_t m) : m_(m), phi_(cyclotomic_poly(m)) {
        for (std::size_t i = 0; i + 1 < phi_.size(); ++i)
            if (!phi_[i].is_zero()) phi_terms_.emplace_back(i, phi_[i].numerator());
        powers_.reserve(static_cast<std::size_t>(m));
        Poly cur = Poly::constant(1) % phi_;
        for (std::int64_t t = 0; t < m; ++t) {
            powers_.push_back(cur);
            cur = cur.shifted(1) % phi_;
        }
    }

    std::int64_t order() const { return m_; }
    std::int64_t degree() const { return phi_.degree(); }
    const Poly& modulus() const { return phi_; }
    /// Residue of x^t, t taken mod m.
    const Poly& root_power(std::int64_t t) const { return powers_[static_cast<std::size_t>(mod_floor(t, m_))]; }

    /// (a * b) mod Phi_m for reduced a, b. Works over Z with one common
    /// denominator per factor, which keeps GMP canonicalization out of the
    /// inner loops; Phi_m is monic with integer coefficients, so reduction stays integral.
    Poly multiply(const Poly& a, const Poly& b) const {
        if (a.is_zero() || b.is_zero()) return {};
        auto [ai, ad] = integral(a);
        auto [bi, bd] = integral(b);
        std::vector<mpz_class> prod(ai.size() + bi.size() - 1);
        for (std::size_t i = 0; i < ai.size(); ++i) {
            if (ai[i] == 0) continue;
            for (std::size_t k = 0; k < bi.size(); ++k) mpz_addmul(prod[i + k].get_mpz_t(), ai[i].get_mpz_t(), bi[k].get_mpz_t());
        }
        const std::size_t d = static_cast<std::size_t>(phi_.degree());
        for (std::size_t top = prod.size(); top-- > d;) {
            if (prod[top] == 0) continue;
            const std::size_t base = top - d;
            for (const auto& [i, c] : phi_terms_) mpz_submul(prod[base + i].get_mpz_t(), prod[top].get_mpz_t(), c.get_mpz_t());
            prod[top] = 0;
        }
        prod.resize(std::min(prod.size(), d));
        const mpz_class den = ad * bd;
        std::vector<Rational> out;
        out.reserve(prod.size());
        for (auto& c : prod) out.emplace_back(c, den);
        return Poly(std::move(out));
    }

    /// Inverse of a nonzero reduced residue. Sums over a field keep inverting the
    /// same few denominators, so results are memoized per field.
    Poly invert(const Poly& a) const {
        std::size_t h = a.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            h = h * 1000003u ^ (mpz_get_ui(a[i].numerator().get_mpz_t()) * 31u + mpz_get_ui(a[i].denominator().get_mpz_t()));
        {
            std::shared_lock lock(cache_mutex_);
            auto range = inverses_.equal_range(h);
            for (auto it = range.first; it != range.second; ++it)
                if (it->second.first == a) return it->second.second;
        }
        auto inv = inverse_mod(a, phi_);
        if (!inv) throw std::logic_error("CycloField: nonzero residue without inverse");
        std::unique_lock lock(cache_mutex_);
        if (inverses_.size() < kInverseCacheLimit) inverses_.emplace(h, std::make_pair(a, *inv));
        return *inv;
    }

  private:
    static constexpr std::size_t kInverseCacheLimit = 4096;

    static std::pair<std::vector<mpz_class>, mpz_class> integral(const Poly& p) {
        mpz_class den = 1;
        for (std::size_t i = 0; i < p.size(); ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p[i].denominator().get_mpz_t());
        std::vector<mpz_class> v(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i].numerator() * (den / p[i].denominator());
        return {std::move(v), std::move(den)};
    }

    std::int64_t m_;
    Poly phi_;
    std::vector<std::pair<std::size_t, mpz_class>> phi_terms_;  // non-leading terms of Phi_m
    std::vector<Poly> powers_;
    mutable std::shared_mutex cache_mutex_;
    mutable std::unordered_multimap<std::size_t, std::pair<Poly, Poly>> inverses_;
};

inline std::shared_ptr<const CycloField> make_field(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("make_field: m must be >= 1");
    return std::make_shared<const CycloField>(m);
}

/// An element of Q(zeta_m), stored as its reduced residue modulo Phi_m.
class CycloElem {
  public:
    CycloElem(std::shared_ptr<const CycloField> field, const Rational& c)
        : field_(std::move(field)), repr_(Poly::constant(c)) {}
    CycloElem(std::shared_ptr<const CycloField> field, const Poly& p)
        : field_(std::move(field)), repr_(p % field_->modulus()) {}

    /// zeta_m^t in the given field.
    static CycloElem root_power(std::shared_ptr<const CycloField> field, std::int64_t t) {
        CycloElem e(std::move(field));
        e.repr_ = e.field_->root_power(t);
        return e;
    }

    std::int64_t modulus_order() const { return field_->order(); }
    const CycloField& field() const { return *field_; }
    const std::shared_ptr<const CycloField>& field_ptr() const { return field_; }
    const Poly& repr() const { return repr_; }
    bool is_zero() const { return repr_.is_zero(); }

    CycloElem& operator+=(const CycloElem& o) {
        check_same_field(o);
        repr_ += o.repr_;
        return *this;
    }
    CycloElem& operator-=(const CycloElem& o) {
        check_same_field(o);
        repr_ -= o.repr_;
        return *this;
    }
    CycloElem& operator*=(const CycloElem& o) {
        check_same_field(o);
        repr_ = field_->multiply(repr_, o.repr_);
        return *this;
    }
    CycloElem& operator*=(const Rational& s) {
        repr_ *= s;
        return *this;
    }
    CycloElem& operator/=(const CycloElem& o) {
        check_same_field(o);
        return *this *= o.inverse();
    }

    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
    friend CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }
    friend CycloElem operator*(const Rational& s, CycloElem a) { return a *= s; }
    friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
    CycloElem operator-() const {
        CycloElem r = *this;
        r.repr_ = -r.repr_;
        return r;
    }

    CycloElem operator+(const Rational& c) const { return *this + CycloElem(field_, c); }
    CycloElem operator-(const Rational& c) const { return *this - CycloElem(field_, c); }

    /// Multiplicative inverse via extended Euclid against Phi_m (irreducible, so
    /// every nonzero residue is a unit).
    CycloElem inverse() const {
        if (is_zero()) throw std::domain_error("CycloElem: division by zero in Q(zeta_" + std::to_string(field_->order()) + ")");
        CycloElem r(field_);
        r.repr_ = field_->invert(repr_);
        return r;
    }

    CycloElem pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        CycloElem result(field_, Rational(1)), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Image under the embedding zeta_m -> exp(2 pi i k / m).
    std::complex<double> embed(std::int64_t k = 1) const {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(field_->order());
        const std::complex<double> z = std::polar(1.0, angle);
        std::complex<double> acc = 0.0;
        for (std::size_t i = repr_.size(); i-- > 0;) acc = acc * z + repr_[i].to_double();
        return acc;
    }

    friend bool operator==(const CycloElem& a, const CycloElem& b) {
        return a.modulus_order() == b.modulus_order() && a.repr_ == b.repr_;
    }

  private:
    explicit CycloElem(std::shared_ptr<const CycloField> field) : field_(std::move(field)) {}

    void check_same_field(const CycloElem& o) const {
        if (o.field_->order() != field_->order())
            throw std::invalid_argument("CycloElem: modulus mismatch (" + std::to_string(field_->order()) + " vs " +
                                        std::to_string(o.field_->order()) + ")");
    }

    std::shared_ptr<const CycloField> field_;
    Poly repr_;
};

/// zeta_m^t as an element of a freshly built Q(zeta_m).
inline CycloElem cyclo_from_root_power(std::int64_t m, std::int64_t t) {
    return CycloElem::root_power(make_field(m), t);
}

enum class FieldOp { add, sub, mul, div };

inline CycloElem cyclo_arith(const CycloElem& a, const CycloElem& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::sub: return a - b;
        case FieldOp::mul: return a * b;
        case FieldOp::div: return a / b;
    }
    throw std::invalid_argument("cyclo_arith: unknown op");
}

inline bool cyclo_is_zero(const CycloElem& a) { return a.is_zero(); }

inline std::string to_string(const CycloElem& a) {
    return to_string(a.repr(), "x") + " (mod Phi_" + std::to_string(a.modulus_order()) + ")";
}

}  // namespace qcat

#endif  // QCATALAN_CYCLOTOMIC_HPP
