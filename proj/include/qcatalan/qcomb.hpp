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

#ifndef QCATALAN_QCOMB_HPP
#define QCATALAN_QCOMB_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcatalan/ring.hpp"

namespace qcat {

namespace detail {

/// p * (1 - q^a), in O(deg p).
inline Poly mul_one_minus_qpow(Poly p, std::size_t a) {
    if (p.is_zero()) return p;
    std::vector<Rational> v = std::move(p).release();
    const std::size_t n = v.size();
    v.resize(n + a);
    for (std::size_t i = n + a; i-- > a;) v[i] -= v[i - a];
    return Poly(std::move(v));
}

/// p / (1 - q^a), asserting that the division is exact.
inline Poly div_one_minus_qpow(const Poly& p, std::size_t a) {
    if (a == 0) throw std::domain_error("div_one_minus_qpow: division by zero polynomial");
    if (p.is_zero()) return p;
    const std::size_t n = static_cast<std::size_t>(p.degree());
    if (n < a) throw std::logic_error("q-binomial kernel: inexact division by 1 - q^" + std::to_string(a));
    std::vector<Rational> r(n - a + 1);
    for (std::size_t j = 0; j <= n - a; ++j) {
        r[j] = p[j];
        if (j >= a) r[j] += r[j - a];
    }
    for (std::size_t j = n - a + 1; j <= n; ++j) {
        // coefficient of q^j in (1 - q^a) r is -r[j - a] (zero when j < a)
        const Rational expected = j >= a ? -r[j - a] : Rational(0);
        if (p[j] != expected)
            throw std::logic_error("q-binomial kernel: inexact division by 1 - q^" + std::to_string(a));
    }
    return Poly(std::move(r));
}

}  // namespace detail

/// (q^s; q)_n = prod_{i=0}^{n-1} (1 - q^{s+i}); the empty product is 1.
inline Poly q_pochhammer(std::size_t s, std::size_t n) {
    Poly r = Poly::constant(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (s + i == 0) return {};
        r = detail::mul_one_minus_qpow(std::move(r), s + i);
    }
    return r;
}

/**
 * Gaussian binomial [n, k]_q, zero outside 0 <= k <= n.
 *
 * Evaluated as the product of quotients prod_{i=1}^{k} (1 - q^{n-k+i}) / (1 - q^i);
 * every partial product is itself a q-binomial, so each division is exact and
 * is checked to be.
 */
inline Poly gaussian_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return {};
    k = std::min(k, n - k);
    Poly r = Poly::constant(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        r = detail::mul_one_minus_qpow(std::move(r), static_cast<std::size_t>(n - k + i));
        r = detail::div_one_minus_qpow(r, static_cast<std::size_t>(i));
    }
    return r;
}

/// The q-Catalan polynomial C_k(q) = [2k, k] - q [2k, k+1].
inline Poly q_catalan(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("q_catalan: k must be non-negative");
    return gaussian_binomial(2 * k, k) - gaussian_binomial(2 * k, k + 1).shifted(1);
}

/// Streams [0,0], [2,1], [4,2], ... using
/// [2k+2, k+1] = [2k, k] (1 - q^{2k+1})(1 - q^{2k+2}) / (1 - q^{k+1})^2.
class CentralBinomials {
  public:
    std::int64_t index() const { return k_; }
    const Poly& current() const { return cur_; }

    void advance() {
        const auto k = static_cast<std::size_t>(k_);
        cur_ = detail::mul_one_minus_qpow(std::move(cur_), 2 * k + 1);
        cur_ = detail::mul_one_minus_qpow(std::move(cur_), 2 * k + 2);
        cur_ = detail::div_one_minus_qpow(cur_, k + 1);
        cur_ = detail::div_one_minus_qpow(cur_, k + 1);
        ++k_;
    }

  private:
    std::int64_t k_ = 0;
    Poly cur_ = Poly::constant(1);
};

/// Streams C_0, C_1, ... ; [2k, k+1] is derived from [2k, k] by one exact
/// quotient, so the whole sequence costs O(k^3) coefficient operations.
class CatalanSequence {
  public:
    CatalanSequence() { refresh(); }

    std::int64_t index() const { return central_.index(); }
    const Poly& current() const { return cur_; }
    const Poly& central() const { return central_.current(); }

    void advance() {
        central_.advance();
        refresh();
    }

  private:
    void refresh() {
        const auto k = static_cast<std::size_t>(central_.index());
        const Poly& b = central_.current();
        // [2k, k+1] = [2k, k] (1 - q^k) / (1 - q^{k+1})
        Poly upper = k == 0 ? Poly{} : detail::div_one_minus_qpow(detail::mul_one_minus_qpow(b, k), k + 1);
        cur_ = b - upper.shifted(1);
    }

    CentralBinomials central_;
    Poly cur_;
};

/// sum_{k=0}^{n-1} q^k C_k(q).
inline Poly catalan_sum(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("catalan_sum: n must be >= 1");
    Poly total;
    CatalanSequence seq;
    for (std::int64_t k = 0; k < n; ++k, seq.advance()) total += seq.current().shifted(static_cast<std::size_t>(k));
    return total;
}

/// (a/3): 0, 1, -1 as a is 0, 1, 2 mod 3.
inline int legendre3(std::int64_t a) {
    switch (((a % 3) + 3) % 3) {
        case 0: return 0;
        case 1: return 1;
        default: return -1;
    }
}

/// A 0/1 word with k zeros and k ones in which every prefix has at least as
/// many zeros as ones.
class BallotWord {
  public:
    explicit BallotWord(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
        if (letters_.size() % 2) throw std::invalid_argument("BallotWord: odd length");
        long balance = 0;
        for (auto c : letters_) {
            if (c > 1) throw std::invalid_argument("BallotWord: letters must be 0 or 1");
            balance += c == 0 ? 1 : -1;
            if (balance < 0) throw std::invalid_argument("BallotWord: prefix with more 1s than 0s");
        }
        if (balance != 0) throw std::invalid_argument("BallotWord: unequal letter counts");
    }

    const std::vector<std::uint8_t>& letters() const { return letters_; }

    /// Sum of the 1-based positions i with a_i > a_{i+1}.
    std::size_t maj() const {
        std::size_t total = 0;
        for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
            if (letters_[i] > letters_[i + 1]) total += i + 1;
        return total;
    }

  private:
    std::vector<std::uint8_t> letters_;
};

/// Backtracking enumeration of all ballot words of length 2k.
inline void for_each_ballot_word(std::size_t k, const std::function<void(const std::vector<std::uint8_t>&)>& visit) {
    std::vector<std::uint8_t> word;
    word.reserve(2 * k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t zeros, std::size_t ones) {
        if (zeros == k && ones == k) {
            visit(word);
            return;
        }
        if (zeros < k) {
            word.push_back(0);
            rec(zeros + 1, ones);
            word.pop_back();
        }
        if (ones < zeros) {
            word.push_back(1);
            rec(zeros, ones + 1);
            word.pop_back();
        }
    };
    rec(0, 0);
}

inline constexpr std::int64_t kDefaultBallotBound = 10;

/// sum over ballot words w of length 2k of q^maj(w).
inline Poly q_catalan_maj_oracle(std::int64_t k, std::int64_t bound = kDefaultBallotBound) {
    if (k < 0) throw std::invalid_argument("q_catalan_maj_oracle: k must be non-negative");
    if (k > bound)
        throw std::out_of_range("q_catalan_maj_oracle: k = " + std::to_string(k) + " exceeds enumeration bound " +
                                std::to_string(bound));
    std::vector<Rational> counts;
    for_each_ballot_word(static_cast<std::size_t>(k), [&](const std::vector<std::uint8_t>& letters) {
        const std::size_t m = BallotWord(letters).maj();
        if (counts.size() <= m) counts.resize(m + 1);
        counts[m] += Rational(1);
    });
    return Poly(std::move(counts));
}

}  // namespace qcat

#endif  // QCATALAN_QCOMB_HPP
