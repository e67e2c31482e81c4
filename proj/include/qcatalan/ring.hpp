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

#ifndef QCATALAN_RING_HPP
#define QCATALAN_RING_HPP

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcat {

/**
 * Exact rational number backed by GMP.
 *
 * Always canonical: lowest terms, positive denominator, zero is 0/1.
 * Integer-valued operands take a fast path through mpz arithmetic, which
 * matters for the q-binomial kernels where every coefficient is integral.
 */
class Rational {
  public:
    Rational() = default;
    Rational(int v) : v_(static_cast<long>(v)) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    explicit Rational(const mpz_class& v) : v_(v) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "a", "-a" or "a/b".
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(s, 10));
            return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return mpz_sgn(num_ref()) == 0; }
    bool is_integer() const { return mpz_cmp_ui(den_ref(), 1) == 0; }
    int sign() const { return mpz_sgn(num_ref()); }
    double to_double() const { return v_.get_d(); }

    /// Value as a machine integer; throws if not integral or out of range.
    std::int64_t to_int64() const {
        if (!is_integer()) throw std::domain_error("Rational: " + to_string() + " is not an integer");
        if (!mpz_fits_slong_p(num_ref())) throw std::overflow_error("Rational: integer out of range");
        return mpz_get_si(num_ref());
    }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) {
        if (is_integer() && o.is_integer())
            mpz_add(num_mut(), num_ref(), o.num_ref());
        else
            v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        if (is_integer() && o.is_integer())
            mpz_sub(num_mut(), num_ref(), o.num_ref());
        else
            v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        if (is_integer() && o.is_integer())
            mpz_mul(num_mut(), num_ref(), o.num_ref());
        else
            v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    /// this -= a * b, the inner step of long division and convolution.
    void submul(const Rational& a, const Rational& b) {
        if (is_integer() && a.is_integer() && b.is_integer())
            mpz_submul(num_mut(), a.num_ref(), b.num_ref());
        else
            v_ -= a.v_ * b.v_;
    }
    void addmul(const Rational& a, const Rational& b) {
        if (is_integer() && a.is_integer() && b.is_integer())
            mpz_addmul(num_mut(), a.num_ref(), b.num_ref());
        else
            v_ += a.v_ * b.v_;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r = *this;
        mpz_neg(r.num_mut(), r.num_ref());
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// Integer power; negative exponents invert.
    Rational pow(std::int64_t e) const {
        if (e < 0) return (Rational(1) / *this).pow(-e);
        Rational result(1), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

  private:
    mpz_srcptr num_ref() const { return mpq_numref(v_.get_mpq_t()); }
    mpz_srcptr den_ref() const { return mpq_denref(v_.get_mpq_t()); }
    mpz_ptr num_mut() { return mpq_numref(v_.get_mpq_t()); }

    mpq_class v_;
};

/**
 * Dense univariate polynomial over Rational; index i holds the coefficient of q^i.
 *
 * Never stores a trailing zero, so the zero polynomial is the empty sequence
 * and equality is structural.
 */
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(Rational c) { return Poly(std::vector<Rational>{std::move(c)}); }
    static Poly monomial(Rational c, std::size_t degree) {
        if (c.is_zero()) return {};
        std::vector<Rational> v(degree + 1);
        v[degree] = std::move(c);
        return Poly(std::move(v));
    }
    /// The indeterminate q.
    static Poly q() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    std::span<const Rational> coeffs() const { return c_; }

    /// Coefficient of q^i (zero past the degree).
    const Rational& operator[](std::size_t i) const {
        static const Rational zero;
        return i < c_.size() ? c_[i] : zero;
    }
    const Rational& leading() const { return c_.back(); }

    /// Releases the coefficient vector for in-place kernels; caller re-normalizes.
    std::vector<Rational> release() && { return std::move(c_); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (!b.c_[j].is_zero()) r[i + j].addmul(a.c_[i], b.c_[j]);
            }
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Multiplies by q^k.
    Poly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<Rational> v(k);
        v.insert(v.end(), c_.begin(), c_.end());
        Poly r;
        r.c_ = std::move(v);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

enum class ArithOp { add, sub, mul };

inline Poly poly_arith(const Poly& a, const Poly& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    throw std::invalid_argument("poly_arith: unknown op");
}

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// Schoolbook long division; a = b*quotient + remainder with deg(remainder) < deg(b).
/// Zero coefficients of b are skipped, so sparse divisors such as (q^n-1)^2 are cheap.
inline DivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly{}, a};

    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < db; ++j)
        if (!b[j].is_zero()) support.push_back(j);

    const Rational& lead = b.leading();
    const bool monic = lead == Rational(1);
    std::vector<Rational> r = Poly(a).release();
    std::vector<Rational> quot(r.size() - db);
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].is_zero()) continue;
        Rational c = monic ? r[i] : r[i] / lead;
        const std::size_t shift = i - db;
        for (std::size_t j : support) r[shift + j].submul(c, b[j]);
        r[i] = Rational();
        quot[shift] = std::move(c);
    }
    r.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

/// Horner evaluation.
inline Rational eval(const Poly& p, const Rational& x) {
    Rational acc;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc *= x;
        acc += p[i];
    }
    return acc;
}

inline Poly pow(const Poly& p, unsigned e) {
    Poly result = Poly::constant(1), base = p;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

/// Inverse of a modulo m by the extended Euclidean algorithm over Q[x].
/// Empty when gcd(a, m) is not a unit (including a == 0 mod m).
inline std::optional<Poly> inverse_mod(const Poly& a, const Poly& m) {
    if (m.degree() < 1) throw std::invalid_argument("inverse_mod: modulus must have positive degree");
    Poly r0 = m, r1 = a % m;
    Poly s0, s1 = Poly::constant(1);
    while (r1.degree() > 0) {
        auto [q, r] = divrem(r0, r1);
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.is_zero()) return std::nullopt;
    return (s1 * (Rational(1) / r1[0])) % m;
}

/// Renders "c0 + c1*q + c2*q^2 + ..." with rational coefficients a/b; "0" for zero.
inline std::string to_string(const Poly& p, std::string_view var = "q") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rational& c = p[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string power;
        if (i == 1)
            power = std::string(var);
        else if (i > 1)
            power = std::string(var) + "^" + std::to_string(i);
        if (power.empty())
            out += mag.to_string();
        else if (mag == Rational(1))
            out += power;
        else
            out += mag.to_string() + "*" + power;
    }
    return out;
}

}  // namespace qcat

#endif  // QCATALAN_RING_HPP
