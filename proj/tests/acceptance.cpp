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

// Acceptance run: one PASS/FAIL line per criterion, default sweeps.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include "qcatalan/qcatalan.hpp"

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Tally {
    std::size_t passed = 0, failed = 0, skipped = 0;
    std::vector<qcat::VerificationReport> reports;
    std::string first_failure;
};

Tally run(std::vector<std::string> suites, std::function<void(qcat::RunConfig&)> tweak = {}) {
    qcat::RunConfig cfg;
    cfg.suites = std::move(suites);
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    if (tweak) tweak(cfg);
    Tally t;
    qcat::run_suites(cfg, [&](const qcat::VerificationReport& r) {
        if (r.status == qcat::Status::pass) ++t.passed;
        else if (r.status == qcat::Status::skipped) ++t.skipped;
        else {
            ++t.failed;
            if (t.first_failure.empty()) {
                t.first_failure = r.suite;
                for (const auto& [k, v] : r.params) t.first_failure += " " + k + "=" + std::to_string(v);
                t.first_failure += ": " + r.witness.value_or("");
            }
        }
        t.reports.push_back(r);
    });
    return t;
}

Outcome all_pass(const Tally& t, std::size_t expected_min) {
    Outcome o;
    o.detail = std::to_string(t.passed) + " passed, " + std::to_string(t.failed) + " failed, " + std::to_string(t.skipped) + " skipped";
    if (t.failed) {
        o.ok = false;
        o.detail += "; first failure " + t.first_failure;
    }
    if (t.passed < expected_min) {
        o.ok = false;
        o.detail += "; expected at least " + std::to_string(expected_min) + " passes";
    }
    return o;
}

std::optional<std::int64_t> opt_param(const qcat::VerificationReport& r, const std::string& name) {
    for (const auto& [k, v] : r.params)
        if (k == name) return v;
    return std::nullopt;
}

/// Every value of `param` in [lo, hi] satisfying `want` has a passing report.
Outcome covers(const Tally& t, const char* param, std::int64_t lo, std::int64_t hi, const std::function<bool(std::int64_t)>& want) {
    std::set<std::int64_t> seen;
    for (const auto& r : t.reports)
        if (r.passed())
            if (auto v = opt_param(r, param)) seen.insert(*v);
    for (std::int64_t v = lo; v <= hi; ++v)
        if (want(v) && !seen.count(v)) return {false, std::string("no passing report for ") + param + "=" + std::to_string(v)};
    return {};
}

Outcome both(Outcome a, const Outcome& b) {
    if (!b.ok) {
        a.ok = false;
        a.detail += "; " + b.detail;
    }
    return a;
}

auto any = [](std::int64_t) { return true; };

}  // namespace

int main() {
    using Criterion = std::pair<std::string, std::function<Outcome()>>;
    const std::vector<Criterion> criteria = {
        {"main-phi2 holds for n = 3..120 step 3",
         [] {
             auto t = run({"main-phi2"});
             return both(all_pass(t, 40), covers(t, "n", 3, 120, [](std::int64_t n) { return n % 3 == 0; }));
         }},
        {"liu-phi2 holds for n = 2..121 with 3 not dividing n",
         [] {
             auto t = run({"liu-phi2"});
             return both(all_pass(t, 80), covers(t, "n", 2, 121, [](std::int64_t n) { return n % 3 != 0; }));
         }},
        {"tauraso-phi holds for n = 2..200",
         [] {
             auto t = run({"tauraso-phi"});
             return both(all_pass(t, 199), covers(t, "n", 2, 200, any));
         }},
        {"liu-petrov holds for n = 2..100",
         [] {
             auto t = run({"liu-petrov"});
             return both(all_pass(t, 99), covers(t, "n", 2, 100, any));
         }},
        {"tauraso13 exact identity for n = 1..30",
         [] {
             auto t = run({"tauraso13"});
             return both(all_pass(t, 30), covers(t, "n", 1, 30, any));
         }},
        {"q-Lucas factorization on 500 seeded tuples", [] { return all_pass(run({"lucas"}), 500); }},
        {"central and row q-binomial congruences for n = 2..40, all k",
         [] {
             auto c = run({"central-binom"});
             auto r = run({"row-binom"});
             return both(both(all_pass(c, 780), all_pass(r, 780)), covers(c, "n", 2, 40, any));
         }},
        {"main3n for n <= 40, all j; n=1 sides equal (-1-2q)/3",
         [] {
             auto t = run({"main3n"});
             Outcome o = both(all_pass(t, 1), covers(t, "n", 1, 40, any));
             std::size_t expected = 0;
             for (std::int64_t n = 1; n <= 40; ++n) expected += qcat::units_mod(3 * n).size();
             if (t.passed != expected) o = {false, o.detail + "; expected " + std::to_string(expected) + " (n, j) pairs"};
             auto s = qcat::main3n_sides(1, 1);
             const qcat::Poly want({qcat::Rational(-1, 3), qcat::Rational(-2, 3)});
             if (s.lhs.repr() != want || s.rhs.repr() != want) o = {false, o.detail + "; n=1 sides differ from (-1-2q)/3"};
             return o;
         }},
        {"mid rearrangement lemma for n = 2..12",
         [] {
             auto t = run({"mid"});
             return both(all_pass(t, 11), covers(t, "n", 2, 12, any));
         }},
        {"extan for m <= 30 at 5 points each",
         [] {
             auto t = run({"extan"});
             return both(all_pass(t, 150), covers(t, "m", 1, 30, any));
         }},
        {"explicit, main3n-new, even, odd and auxiliary identities for N <= 20, all j",
         [] {
             Outcome o;
             for (const char* s : {"explicit", "main3n-new", "even", "odd", "aux"}) {
                 auto t = run({s});
                 const char* key = std::string(s) == "explicit" || std::string(s) == "main3n-new" ? "n" : "N";
                 auto one = both(all_pass(t, 20), covers(t, key, 1, 20, any));
                 o = both(o, one);
                 o.detail += std::string(o.detail.empty() ? "" : "; ") + s + ": " + one.detail;
             }
             return o;
         }},
        {"partial fractions at >= 20 points each",
         [] {
             auto t = run({"pfd"});
             Outcome o = all_pass(t, 3);
             for (const auto& r : t.reports)
                 if (opt_param(r, "points").value_or(0) < 20) o = {false, o.detail + "; fewer than 20 points"};
             return o;
         }},
        {"trigonometric sum below 1e-8 for N = 2..200",
         [] {
             auto t = run({"trig"}, [](qcat::RunConfig& c) {
                 c.mode = qcat::EvalMode::floating;
                 c.tol = 1e-8;
             });
             return both(all_pass(t, 199), covers(t, "N", 2, 200, any));
         }},
        {"sawtooth Fourier identity for N <= 12",
         [] {
             auto t = run({"sawtooth"});
             return both(all_pass(t, 11), covers(t, "N", 2, 12, any));
         }},
        {"character-sum identity for odd m <= 49, 3 not dividing m, exact and float",
         [] {
             auto exact = run({"taoconj"});
             auto fl = run({"taoconj"}, [](qcat::RunConfig& c) { c.mode = qcat::EvalMode::floating; });
             auto want = [](std::int64_t N) { return (2 * N - 1) % 3 != 0; };
             return both(both(all_pass(exact, 1), all_pass(fl, exact.passed)), covers(exact, "N", 2, 25, want));
         }},
        {"major-index oracle for k <= 8 and C_k(1) = Catalan for k <= 20",
         [] {
             auto t = run({"maj-oracle"});
             Outcome o = both(all_pass(t, 21), covers(t, "k", 0, 20, any));
             std::set<std::int64_t> enumerated;
             for (const auto& r : t.reports)
                 if (opt_param(r, "enumerated").value_or(0)) enumerated.insert(r.param("k"));
             for (std::int64_t k = 0; k <= 8; ++k)
                 if (!enumerated.count(k)) o = {false, o.detail + "; k=" + std::to_string(k) + " not checked against enumeration"};
             return o;
         }},
        {"identity corpus agrees with the dedicated suites",
         [] {
             auto t = run({"dsl-corpus"});
             Outcome o = all_pass(t, 20);
             std::size_t linked = 0;
             for (const auto& r : t.reports) {
                 if (r.note && r.note->find("; no linked suite") != std::string::npos) o = {false, o.detail + "; unlinked label " + *r.note};
                 if (r.note && r.note->find("; linked") != std::string::npos) ++linked;
             }
             o.detail += "; " + std::to_string(linked) + " linked";
             if (linked == 0) o.ok = false;
             return o;
         }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        failures += !o.ok;
        std::printf("%s %2zu %s (%s, %lld ms)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                    static_cast<long long>(ms));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures ? 1 : 0;
}
