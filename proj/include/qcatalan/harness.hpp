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

#ifndef QCATALAN_HARNESS_HPP
#define QCATALAN_HARNESS_HPP

// Suite registry, parameter sweeps and the ordered parallel runner.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "qcatalan/charsum.hpp"
#include "qcatalan/congruence.hpp"
#include "qcatalan/qdsl.hpp"
#include "qcatalan/report.hpp"
#include "qcatalan/rootid.hpp"

#ifndef QCATALAN_CORPUS_PATH
#define QCATALAN_CORPUS_PATH "corpus/identities.qid"
#endif

namespace qcat {

inline constexpr std::uint64_t kDefaultSeed = 20240615;

struct RunConfig {
    std::vector<std::string> suites;
    std::optional<std::int64_t> n;      // single value of the suite's main parameter
    std::optional<std::int64_t> n_max;  // upper end of the sweep
    std::optional<std::int64_t> j;      // nullopt: every admissible j
    EvalMode mode = EvalMode::exact;
    double tol = 1e-9;
    unsigned jobs = 1;
    std::string corpus_path = QCATALAN_CORPUS_PATH;
    std::uint64_t seed = kDefaultSeed;
};

using Task = std::function<std::vector<VerificationReport>()>;

struct SuiteInfo {
    std::string id;
    std::string sweep;  // default sweep, for help output
    bool float_mode = false;
    std::function<std::vector<Task>(const RunConfig&)> plan;
};

struct Sweep {
    std::int64_t lo;
    std::int64_t hi;
    std::int64_t step = 1;
};

namespace detail {

/// --n pins a single value, --n-max moves the upper end.
inline Sweep resolve(const RunConfig& cfg, Sweep def) {
    if (cfg.n) return {*cfg.n, *cfg.n, 1};
    if (cfg.n_max) def.hi = *cfg.n_max;
    return def;
}

inline std::vector<std::int64_t> values(const Sweep& s) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = s.lo; v <= s.hi; v += s.step) out.push_back(v);
    return out;
}

/// Splits values into at most `parts` contiguous chunks.
inline std::vector<std::vector<std::int64_t>> chunks(const std::vector<std::int64_t>& vals, unsigned parts) {
    std::vector<std::vector<std::int64_t>> out;
    if (vals.empty()) return out;
    parts = std::max(1u, std::min<unsigned>(parts, static_cast<unsigned>(vals.size())));
    const std::size_t per = (vals.size() + parts - 1) / parts;
    for (std::size_t i = 0; i < vals.size(); i += per)
        out.emplace_back(vals.begin() + static_cast<std::ptrdiff_t>(i), vals.begin() + static_cast<std::ptrdiff_t>(std::min(vals.size(), i + per)));
    return out;
}

/// One task per value.
inline std::vector<Task> per_value(const std::vector<std::int64_t>& vals, std::function<std::vector<VerificationReport>(std::int64_t)> f) {
    std::vector<Task> tasks;
    for (auto v : vals) tasks.push_back([f, v] { return f(v); });
    return tasks;
}

/// j values for modulus m: the selected one (if admissible) or all units.
inline std::vector<std::int64_t> j_values(const RunConfig& cfg, std::int64_t m) {
    if (cfg.j) {
        if (std::gcd(*cfg.j, m) == 1) return {*cfg.j};
        return {};
    }
    return units_mod(m);
}

inline VerificationReport skipped_j(const std::string& suite, Params params, std::int64_t j, std::int64_t m) {
    Stopwatch sw;
    params.emplace_back("j", j);
    return make_skipped(suite, std::move(params), "j = " + std::to_string(j) + " is not a unit mod " + std::to_string(m), sw);
}

/// Sweeps whose checks share one incrementally built sum; chunks restart the stream.
inline std::vector<Task> streamed(const RunConfig& cfg, const std::vector<std::int64_t>& vals, bool central,
                                  std::function<VerificationReport(std::int64_t, const Poly&)> check) {
    std::vector<Task> tasks;
    for (auto chunk : chunks(vals, cfg.jobs)) {
        tasks.push_back([chunk, central, check] {
            std::vector<VerificationReport> out;
            std::size_t next = 0;
            auto visit = [&](std::int64_t n, const Poly& s) {
                if (next < chunk.size() && chunk[next] == n) {
                    out.push_back(check(n, s));
                    ++next;
                }
            };
            if (central) for_each_central_sum(chunk.front(), chunk.back(), visit);
            else for_each_catalan_sum(chunk.front(), chunk.back(), visit);
            return out;
        });
    }
    return tasks;
}

inline Rational catalan_number(std::int64_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    return Rational(b, mpz_class(k + 1));
}

inline VerificationReport verify_maj_oracle(std::int64_t k) {
    Stopwatch sw;
    const Poly c = q_catalan(k);
    Params params{{"k", k}};
    const Rational at_one = eval(c, Rational(1));
    if (at_one != catalan_number(k))
        return make_fail("maj-oracle", params, "C_k(1) = " + at_one.to_string() + ", Catalan number " + catalan_number(k).to_string(), sw);
    if (k <= kDefaultBallotBound) {
        Poly d = c - q_catalan_maj_oracle(k);
        if (!d.is_zero()) return make_fail("maj-oracle", params, "q_catalan - maj enumeration = " + to_string(d), sw);
        params.emplace_back("enumerated", 1);
    } else {
        params.emplace_back("enumerated", 0);
    }
    return make_pass("maj-oracle", params, sw);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Corpus links: the dedicated suite's sides for a labelled corpus entry.

struct LinkSides {
    std::variant<PolySides, CycloSides> sides;
};

/// nullopt when the binding has no counterpart in the dedicated suite.
using CorpusLink = std::function<std::optional<LinkSides>(const dsl::Bindings&)>;

namespace detail {

inline std::int64_t get(const dsl::Bindings& b, const char* name) {
    auto it = b.find(name);
    if (it == b.end()) throw dsl::EvalError(std::string("corpus link: parameter '") + name + "' is not bound");
    return it->second;
}

inline LinkSides poly_link(Poly lhs, Poly rhs) { return {PolySides{std::move(lhs), std::move(rhs)}}; }
inline LinkSides cyclo_link(CycloSides s) { return {std::move(s)}; }

/// p(zeta^j) in the given field.
inline CycloElem at_root(const Poly& p, const std::shared_ptr<const CycloField>& field, std::int64_t j) {
    CycloElem out(field, Rational(0));
    for (std::int64_t i = 0; i <= p.degree(); ++i)
        if (!p[static_cast<std::size_t>(i)].is_zero()) out += CycloElem::root_power(field, i * j) * p[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace detail

inline const std::map<std::string, CorpusLink>& corpus_links() {
    using detail::get;
    static const std::map<std::string, CorpusLink> links = [] {
        std::map<std::string, CorpusLink> m;
        // q-Catalan and q-binomial objects
        m["qcat"] = [](const dsl::Bindings& b) {
            const auto k = get(b, "k");
            return std::optional(detail::poly_link(q_catalan(k), q_catalan(k)));
        };
        m["qcat-product"] = [](const dsl::Bindings& b) {
            const auto k = get(b, "k");
            return std::optional(detail::poly_link(detail::mul_one_minus_qpow(q_catalan(k), static_cast<std::size_t>(k + 1)),
                                                   detail::mul_one_minus_qpow(gaussian_binomial(2 * k, k), 1)));
        };
        // congruences
        m["tauraso-phi"] = [](const dsl::Bindings& b) {
            const auto n = get(b, "n");
            return std::optional(detail::poly_link(catalan_sum(n), tauraso_mod_phi_rhs(n)));
        };
        m["liu-phi2"] = [](const dsl::Bindings& b) {
            const auto n = get(b, "n");
            return std::optional(detail::poly_link(catalan_sum(n), liu_mod_phi2_rhs(n)));
        };
        m["main-phi2"] = [](const dsl::Bindings& b) {
            const auto n = get(b, "n");
            return std::optional(detail::poly_link(catalan_sum(n), main_theorem_rhs(n)));
        };
        m["liu-petrov"] = [](const dsl::Bindings& b) {
            const auto n = get(b, "n");
            return std::optional(detail::poly_link(central_sum(n), liu_petrov_rhs(n)));
        };
        m["tauraso13"] = [](const dsl::Bindings& b) {
            const auto n = get(b, "n");
            return std::optional(detail::poly_link(tauraso13_lhs(n), tauraso13_rhs(n)));
        };
        m["lucas"] = [](const dsl::Bindings& b) {
            const auto n = get(b, "n"), a = get(b, "a"), bb = get(b, "b"), c = get(b, "c"), d = get(b, "d");
            return std::optional(detail::poly_link(gaussian_binomial(a * n + bb, c * n + d), gaussian_binomial(bb, d) * Rational(binomial(a, c))));
        };
        m["row-binom"] = [](const dsl::Bindings& b) {
            auto s = row_qbinom_sides(get(b, "n"), get(b, "k"));
            return std::optional(detail::poly_link(std::move(s.lhs), std::move(s.rhs)));
        };
        m["central-binom"] = [](const dsl::Bindings& b) {
            auto s = central_qbinom_sides(get(b, "n"), get(b, "k"));
            return std::optional(detail::poly_link(std::move(s.lhs), std::move(s.rhs)));
        };
        m["qpascal"] = [](const dsl::Bindings& b) {
            const auto n = get(b, "n"), k = get(b, "k");
            return std::optional(detail::poly_link(gaussian_binomial(2 * n, n + k), gaussian_binomial(2 * n, n + k)));
        };
        // root-of-unity identities
        m["main-root"] = [](const dsl::Bindings& b) {
            const auto n = get(b, "n"), j = get(b, "j");
            auto field = make_field(get(b, "m"));
            return std::optional(detail::cyclo_link({detail::at_root(catalan_sum(n), field, j), detail::at_root(main_theorem_rhs(n), field, j)}));
        };
        m["main3n-new"] = [](const dsl::Bindings& b) {
            const auto n = get(b, "n"), h = get(b, "j");
            return std::optional(detail::cyclo_link(main3n_new_sides(n, mod_floor(h, 3 * n), h)));
        };
        m["sawtooth"] = [](const dsl::Bindings& b) {
            return std::optional(detail::cyclo_link(sawtooth_sides(get(b, "N"), get(b, "j"), get(b, "k"))));
        };
        m["liu-mirror"] = [](const dsl::Bindings& b) { return std::optional(detail::cyclo_link(liu_mirror_sides(get(b, "n"), get(b, "j")))); };
        m["main3n"] = [](const dsl::Bindings& b) { return std::optional(detail::cyclo_link(main3n_sides(get(b, "n"), get(b, "j")))); };
        m["explicit"] = [](const dsl::Bindings& b) { return std::optional(detail::cyclo_link(explicit_sides(get(b, "n"), get(b, "j")))); };
        m["extan"] = [](const dsl::Bindings& b) -> std::optional<LinkSides> {
            if (get(b, "j") != 1) return std::nullopt;
            return detail::cyclo_link(extan_sides(get(b, "m"), Rational(mpz_class(get(b, "zn")), mpz_class(get(b, "zd")))));
        };
        auto pfd = [](PfdKind kind) {
            return [kind](const dsl::Bindings& b) -> std::optional<LinkSides> {
                if (get(b, "j") != 1) return std::nullopt;
                return detail::cyclo_link(pfd_sides(kind, Rational(mpz_class(get(b, "xn")), mpz_class(get(b, "xd")))));
            };
        };
        m["pfd3"] = pfd(PfdKind::pfd3);
        m["pfd6"] = pfd(PfdKind::pfd6);
        m["cube"] = pfd(PfdKind::cube);
        m["even-case"] = [](const dsl::Bindings& b) {
            return std::optional(detail::cyclo_link(even_case_display_sides(ParityContext(Parity::even, get(b, "N"), get(b, "j")))));
        };
        m["even-lemma"] = [](const dsl::Bindings& b) {
            return std::optional(detail::cyclo_link(even_lemma_sides(ParityContext(Parity::even, get(b, "N"), get(b, "j")))));
        };
        m["odd-case"] = [](const dsl::Bindings& b) {
            return std::optional(detail::cyclo_link(odd_case_display_sides(ParityContext(Parity::odd, get(b, "N"), get(b, "j")))));
        };
        m["odd-lemma"] = [](const dsl::Bindings& b) {
            return std::optional(detail::cyclo_link(odd_lemma_sides(ParityContext(Parity::odd, get(b, "N"), get(b, "j")))));
        };

        // parity-case auxiliaries: one named sub-identity each
        struct AuxLink {
            const char* label;
            Parity parity;
            const char* check;
        };
        static const AuxLink aux_links[] = {
            {"aux-omega", Parity::even, "omega: 1 - w + w^2 = 0"},
            {"aux-B2", Parity::even, "B2 = N/2"},
            {"aux-B13", Parity::even, "B1 + B3 = N"},
            {"aux-sym1", Parity::even, "A1 + A6 = N-1"},
            {"aux-sym2", Parity::even, "A2 + A5 = N-1"},
            {"aux-sym3", Parity::even, "A3 + A4 = N-1"},
            {"even-i", Parity::even, "(i) pfd6 sum"},
            {"even-ii", Parity::even, "(ii) pfd3 sum"},
            {"even-ii-collapsed", Parity::even, "(ii) collapsed"},
            {"aux-B1", Parity::even, "B1 in terms of A"},
            {"aux-C12", Parity::even, "C1 + C2"},
            {"aux-C-explicit", Parity::even, "explicit split"},
            {"aux-C2", Parity::even, "C2 in terms of A"},
            {"even-reduced", Parity::even, "reduced form"},
            {"odd-omega", Parity::odd, "w^2 = q^(2N-1)"},
            {"odd-i", Parity::odd, "(i) pfd6 sum"},
            {"odd-ii", Parity::odd, "(ii) pfd3 sum"},
            {"odd-iii", Parity::odd, "(iii) C1 + C2"},
            {"odd-iii-explicit", Parity::odd, "(iii) explicit split"},
            {"odd-iii-c2", Parity::odd, "(iii) 6 C2"},
            {"odd2", Parity::odd, "(odd2)"},
            {"cube-sum0", Parity::odd, "cube pfd at q^k"},
            {"cube-sum1", Parity::odd, "cube pfd at w q^k"},
            {"cube-sum2", Parity::odd, "cube pfd at w^2 q^k"},
            {"odd3", Parity::odd, "(odd3)"},
            {"odd4", Parity::odd, "(odd4)"},
            {"odd-final", Parity::odd, "final equality"},
            {"odd-final-reindexed", Parity::odd, "final equality (reindexed)"},
            {"odd-full-sum", Parity::odd, "both sides = full sum"},
        };
        for (const auto& al : aux_links) {
            m[al.label] = [al](const dsl::Bindings& b) -> std::optional<LinkSides> {
                const auto checks = auxiliary_checks(get(b, "N"), get(b, "j"), al.parity);
                const CycloSides* sides = checks.find(al.check);
                if (!sides) throw std::logic_error(std::string("corpus link: no check named '") + al.check + "'");
                return detail::cyclo_link(*sides);
            };
        }
        return m;
    }();
    return links;
}

namespace detail {

/// Compares a corpus entry's values with its linked suite sides.
inline std::optional<std::string> link_mismatch(const dsl::CorpusEntry& entry, const dsl::EntryValues& v, const LinkSides& link) {
    auto poly_differs = [&](const Poly& dsl_side, const Poly& suite_side) {
        Poly d = dsl_side - suite_side;
        if (entry.mode == dsl::CorpusMode::phi) d = reduce_mod_phi_power(d, v.modulus, v.exponent);
        return !d.is_zero();
    };
    if (const auto* ps = std::get_if<PolySides>(&link.sides)) {
        if (!v.lhs_poly) return "suite yields polynomials, entry is in cyclo mode";
        if (poly_differs(*v.lhs_poly, ps->lhs)) return "lhs disagrees with the dedicated suite: " + to_string(*v.lhs_poly - ps->lhs);
        if (poly_differs(*v.rhs_poly, ps->rhs)) return "rhs disagrees with the dedicated suite: " + to_string(*v.rhs_poly - ps->rhs);
        return std::nullopt;
    }
    const auto& cs = std::get<CycloSides>(link.sides);
    if (!v.lhs_elem) return "suite yields field elements, entry is not in cyclo mode";
    if (v.lhs_elem->modulus_order() != cs.lhs.modulus_order())
        return "field mismatch: entry in Q(zeta_" + std::to_string(v.lhs_elem->modulus_order()) + "), suite in Q(zeta_" +
               std::to_string(cs.lhs.modulus_order()) + ")";
    if (!(*v.lhs_elem == cs.lhs)) return "lhs disagrees with the dedicated suite: " + to_string(*v.lhs_elem - cs.lhs);
    if (!(*v.rhs_elem == cs.rhs)) return "rhs disagrees with the dedicated suite: " + to_string(*v.rhs_elem - cs.rhs);
    return std::nullopt;
}

}  // namespace detail

/**
 * Checks one binding tuple of a corpus entry: the identity itself and, for a
 * linked label, agreement of both sides with the dedicated suite. The note
 * records the label and whether a suite comparison took place.
 */
inline VerificationReport verify_corpus_entry(const dsl::CorpusEntry& entry, const dsl::Bindings& b) {
    Stopwatch sw;
    Params params = dsl::bindings_params(entry, b);
    std::string note = entry.label.empty() ? "unlabelled" : entry.label;
    std::optional<std::string> witness;
    try {
        const dsl::EntryValues v = dsl::evaluate_entry(entry, b);
        witness = dsl::entry_residue(v, entry.mode);
        const auto& links = corpus_links();
        auto it = links.find(entry.label);
        if (it == links.end()) {
            note += "; no linked suite";
        } else if (auto sides = it->second(b)) {
            if (!witness) witness = detail::link_mismatch(entry, v, *sides);
            note += "; linked";
        } else {
            note += "; outside linked suite parameters";
        }
    } catch (const dsl::EvalError& err) {
        witness = std::string("evaluation error: ") + err.what();
    } catch (const std::domain_error& err) {
        witness = std::string("evaluation error: ") + err.what();
    }
    VerificationReport rep = witness ? make_fail("dsl-corpus", std::move(params), *witness, sw) : make_pass("dsl-corpus", std::move(params), sw);
    rep.note = std::move(note);
    return rep;
}

// ---------------------------------------------------------------------------
// Suites

inline const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> suites = [] {
        using detail::per_value;
        using detail::resolve;
        using detail::values;
        std::vector<SuiteInfo> s;

        s.push_back({"tauraso-phi", "n = 2..200", false, [](const RunConfig& cfg) {
                         return detail::streamed(cfg, values(resolve(cfg, {2, 200})), false,
                                                 [](std::int64_t n, const Poly& sum) { return verify_tauraso_mod_phi(n, sum); });
                     }});
        s.push_back({"liu-phi2", "n = 2..121, 3 not dividing n", false, [](const RunConfig& cfg) {
                         std::vector<std::int64_t> vals;
                         for (auto n : values(resolve(cfg, {2, 121})))
                             if (n % 3 || cfg.n) vals.push_back(n);
                         return detail::streamed(cfg, vals, false, [](std::int64_t n, const Poly& sum) { return verify_liu_mod_phi2(n, sum); });
                     }});
        s.push_back({"main-phi2", "n = 3, 6, ..., 120", false, [](const RunConfig& cfg) {
                         return detail::streamed(cfg, values(resolve(cfg, {3, 120, 3})), false,
                                                 [](std::int64_t n, const Poly& sum) { return verify_main_theorem(n, sum); });
                     }});
        s.push_back({"liu-petrov", "n = 2..100", false, [](const RunConfig& cfg) {
                         return detail::streamed(cfg, values(resolve(cfg, {2, 100})), true,
                                                 [](std::int64_t n, const Poly& sum) { return verify_liu_petrov(n, sum); });
                     }});
        s.push_back({"tauraso13", "n = 1..30", false, [](const RunConfig& cfg) {
                         return per_value(values(resolve(cfg, {1, 30})), [](std::int64_t n) { return std::vector{verify_tauraso13_identity(n)}; });
                     }});
        s.push_back({"lucas", "500 seeded tuples, a, c <= 4, 2 <= n <= 30", false, [](const RunConfig& cfg) {
                         const Sweep sw = resolve(cfg, {2, 30});
                         if (sw.lo < 2) throw std::invalid_argument("lucas: n must be >= 2");
                         std::mt19937_64 rng(cfg.seed);
                         auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
                         std::vector<std::array<std::int64_t, 5>> tuples;
                         for (int i = 0; i < 500; ++i) {
                             const std::int64_t n = pick(sw.lo, std::max(sw.lo, sw.hi));
                             tuples.push_back({pick(0, 4), pick(0, n - 1), pick(0, 4), pick(0, n - 1), n});
                         }
                         std::vector<Task> tasks;
                         for (std::size_t i = 0; i < tuples.size(); i += 25) {
                             std::vector<std::array<std::int64_t, 5>> part(tuples.begin() + static_cast<std::ptrdiff_t>(i),
                                                                           tuples.begin() + static_cast<std::ptrdiff_t>(std::min(tuples.size(), i + 25)));
                             tasks.push_back([part] {
                                 std::vector<VerificationReport> out;
                                 for (const auto& t : part) out.push_back(verify_lucas_qbinom(t[0], t[1], t[2], t[3], t[4]));
                                 return out;
                             });
                         }
                         return tasks;
                     }});
        s.push_back({"central-binom", "n = 2..40, k = 1..n-1", false, [](const RunConfig& cfg) {
                         return per_value(values(resolve(cfg, {2, 40})), [](std::int64_t n) {
                             std::vector<VerificationReport> out;
                             for (std::int64_t k = 1; k < n; ++k) out.push_back(verify_central_qbinom_congruence(n, k));
                             return out;
                         });
                     }});
        s.push_back({"row-binom", "n = 2..40, k = 1..n-1", false, [](const RunConfig& cfg) {
                         return per_value(values(resolve(cfg, {2, 40})), [](std::int64_t n) {
                             std::vector<VerificationReport> out;
                             for (std::int64_t k = 1; k < n; ++k) out.push_back(verify_row_qbinom_congruence(n, k));
                             return out;
                         });
                     }});
        s.push_back({"reduction-chain", "n = 2..60", false, [](const RunConfig& cfg) {
                         return per_value(values(resolve(cfg, {2, 60})), [](std::int64_t n) { return std::vector{verify_reduction_chain(n)}; });
                     }});
        s.push_back({"main3n", "n = 1..40, every j coprime to 3n", false, [](const RunConfig& cfg) {
                         return per_value(values(resolve(cfg, {1, 40})), [cfg](std::int64_t n) {
                             std::vector<VerificationReport> out;
                             auto js = detail::j_values(cfg, 3 * n);
                             if (js.empty()) out.push_back(detail::skipped_j("main3n", {{"n", n}}, *cfg.j, 3 * n));
                             for (auto j : js) out.push_back(verify_main3n(n, j));
                             return out;
                         });
                     }});
        s.push_back({"liu-mirror", "n = 2..60, 3 not dividing n, every j coprime to n", false, [](const RunConfig& cfg) {
                         std::vector<std::int64_t> vals;
                         for (auto n : values(resolve(cfg, {2, 60})))
                             if (n % 3) vals.push_back(n);
                         return per_value(vals, [cfg](std::int64_t n) {
                             std::vector<VerificationReport> out;
                             auto js = detail::j_values(cfg, n);
                             if (js.empty()) out.push_back(detail::skipped_j("liu-mirror", {{"n", n}}, *cfg.j, n));
                             for (auto j : js) out.push_back(verify_liu_mirror(n, j));
                             return out;
                         });
                     }});
        s.push_back({"main3n-new", "n = 1..20, every j, both square roots of q", false, [](const RunConfig& cfg) {
                         return per_value(values(resolve(cfg, {1, 20})), [cfg](std::int64_t n) {
                             std::vector<VerificationReport> out;
                             auto js = detail::j_values(cfg, 3 * n);
                             if (js.empty()) out.push_back(detail::skipped_j("main3n-new", {{"n", n}}, *cfg.j, 3 * n));
                             for (auto j : js)
                                 for (auto h : half_root_choices(n, j)) out.push_back(verify_main3n_new(n, j, h));
                             return out;
                         });
                     }});
        s.push_back({"mid", "n = 2..12", false, [](const RunConfig& cfg) {
                         return per_value(values(resolve(cfg, {2, 12})), [](std::int64_t n) { return std::vector{verify_mid_identity(n)}; });
                     }});
        s.push_back({"extan", "m = 1..30, 5 seeded rational z each", false, [](const RunConfig& cfg) {
                         std::vector<Task> tasks;
                         std::mt19937_64 rng(cfg.seed);
                         std::uniform_int_distribution<std::int64_t> dist(1, 9);
                         for (auto m : values(resolve(cfg, {1, 30}))) {
                             std::vector<Rational> zs;
                             while (zs.size() < 5) {
                                 Rational z(mpz_class(dist(rng)), mpz_class(dist(rng)));
                                 if (z.pow(m) != Rational(1)) zs.push_back(z);
                             }
                             tasks.push_back([m, zs] {
                                 std::vector<VerificationReport> out;
                                 for (const auto& z : zs) out.push_back(verify_extan(m, z));
                                 return out;
                             });
                         }
                         return tasks;
                     }});
        s.push_back({"explicit", "n = 1..20, every j coprime to 3n", false, [](const RunConfig& cfg) {
                         return per_value(values(resolve(cfg, {1, 20})), [cfg](std::int64_t n) {
                             std::vector<VerificationReport> out;
                             auto js = detail::j_values(cfg, 3 * n);
                             if (js.empty()) out.push_back(detail::skipped_j("explicit", {{"n", n}}, *cfg.j, 3 * n));
                             for (auto j : js) out.push_back(verify_explicit(n, j));
                             return out;
                         });
                     }});
        auto parity_suite = [](std::string id, std::function<VerificationReport(std::int64_t, std::int64_t)> f, bool even) {
            return SuiteInfo{id, "N = 1..20, every admissible j", false, [id, f, even](const RunConfig& cfg) {
                                 return per_value(values(resolve(cfg, {1, 20})), [cfg, id, f, even](std::int64_t N) {
                                     const std::int64_t m = even ? 6 * N : 3 * (2 * N - 1);
                                     std::vector<VerificationReport> out;
                                     auto js = detail::j_values(cfg, m);
                                     if (js.empty()) out.push_back(detail::skipped_j(id, {{"N", N}}, *cfg.j, m));
                                     for (auto j : js) out.push_back(f(N, j));
                                     return out;
                                 });
                             }};
        };
        s.push_back(parity_suite("even", verify_even_case, true));
        s.push_back(parity_suite("odd", verify_odd_case, false));
        s.push_back({"aux", "N = 1..20, every admissible j, both parities", false, [](const RunConfig& cfg) {
                         std::vector<Task> tasks;
                         for (auto N : values(resolve(cfg, {1, 20})))
                             for (Parity p : {Parity::even, Parity::odd}) {
                                 tasks.push_back([cfg, N, p] {
                                     const std::int64_t m = p == Parity::even ? 6 * N : 3 * (2 * N - 1);
                                     std::vector<VerificationReport> out;
                                     auto js = detail::j_values(cfg, m);
                                     if (js.empty()) out.push_back(detail::skipped_j("aux", {{"N", N}, {"odd", p == Parity::odd}}, *cfg.j, m));
                                     for (auto j : js) out.push_back(verify_aux_properties(N, j, p));
                                     return out;
                                 });
                             }
                         return tasks;
                     }});
        s.push_back({"pfd", "pfd3, pfd6, cube", false, [](const RunConfig&) {
                         std::vector<Task> tasks;
                         for (PfdKind k : {PfdKind::pfd3, PfdKind::pfd6, PfdKind::cube}) tasks.push_back([k] { return std::vector{verify_pfd(k)}; });
                         return tasks;
                     }});
        s.push_back({"trig", "N = 2..200 (floating point)", true, [](const RunConfig& cfg) {
                         const double tol = cfg.tol;
                         std::vector<Task> tasks;
                         for (auto chunk : detail::chunks(values(resolve(cfg, {2, 200})), std::max(1u, cfg.jobs)))
                             tasks.push_back([chunk, tol] {
                                 std::vector<VerificationReport> out;
                                 for (auto N : chunk) out.push_back(verify_trig_identity(N, tol));
                                 return out;
                             });
                         return tasks;
                     }});
        s.push_back({"sawtooth", "N = 2..12, every k below 3(2N-1) not divisible by 2N-1, j = 1", false, [](const RunConfig& cfg) {
                         return per_value(values(resolve(cfg, {2, 12})), [cfg](std::int64_t N) {
                             const std::int64_t p = 2 * N - 1;
                             const std::int64_t j = cfg.j.value_or(1);
                             std::vector<VerificationReport> out;
                             if (std::gcd(j, 3 * p) != 1) {
                                 out.push_back(detail::skipped_j("sawtooth", {{"N", N}}, j, 3 * p));
                                 return out;
                             }
                             for (std::int64_t k = 1; k < 3 * p; ++k)
                                 if (k % p) out.push_back(verify_sawtooth(N, j, k));
                             return out;
                         });
                     }});
        s.push_back({"taoconj", "N = 2..25 with 3 not dividing 2N-1, every non-principal character", true, [](const RunConfig& cfg) {
                         std::vector<std::int64_t> vals;
                         for (auto N : values(resolve(cfg, {2, 25})))
                             if ((2 * N - 1) % 3) vals.push_back(N);
                         const EvalMode mode = cfg.mode;
                         const double tol = cfg.tol;
                         return per_value(vals, [mode, tol](std::int64_t N) {
                             std::vector<VerificationReport> out;
                             const auto chars = character_group(2 * N - 1);
                             for (std::size_t i = 0; i < chars.size(); ++i) {
                                 if (chars[i].principal()) continue;
                                 auto rep = verify_taoconj(N, chars[i], mode, tol, static_cast<std::int64_t>(i));
                                 if (mode == EvalMode::exact && rep.passed()) {
                                     // exact pass must imply float pass
                                     const double r = taoconj_float_residual(N, chars[i]);
                                     if (!(r < tol)) {
                                         char buf[80];
                                         std::snprintf(buf, sizeof buf, "float cross-check residual %.3e", r);
                                         rep.status = Status::fail;
                                         rep.witness = buf;
                                     }
                                 }
                                 out.push_back(std::move(rep));
                             }
                             return out;
                         });
                     }});
        s.push_back({"maj-oracle", "k = 0..20 (enumeration for k <= 10)", false, [](const RunConfig& cfg) {
                         return per_value(values(resolve(cfg, {0, 20})), [](std::int64_t k) { return std::vector{detail::verify_maj_oracle(k)}; });
                     }});
        s.push_back({"dsl-corpus", "shipped corpus", false, [](const RunConfig& cfg) {
                         std::vector<Task> tasks;
                         for (auto& entry : dsl::load_corpus(cfg.corpus_path)) {
                             auto e = std::make_shared<const dsl::CorpusEntry>(std::move(entry));
                             tasks.push_back([e] {
                                 std::vector<VerificationReport> out;
                                 for (const auto& b : dsl::expand_params(*e)) out.push_back(verify_corpus_entry(*e, b));
                                 return out;
                             });
                         }
                         return tasks;
                     }});
        return s;
    }();
    return suites;
}

inline const SuiteInfo* find_suite(const std::string& id) {
    for (const auto& s : suite_registry())
        if (s.id == id) return &s;
    return nullptr;
}

/// Expands "all" and validates ids and the mode; throws std::invalid_argument.
inline std::vector<const SuiteInfo*> select_suites(const RunConfig& cfg) {
    std::vector<const SuiteInfo*> out;
    for (const auto& id : cfg.suites) {
        if (id == "all") {
            for (const auto& s : suite_registry()) out.push_back(&s);
            continue;
        }
        const SuiteInfo* s = find_suite(id);
        if (!s) throw std::invalid_argument("unknown suite '" + id + "'");
        out.push_back(s);
    }
    if (out.empty()) throw std::invalid_argument("no suite selected");
    if (cfg.mode == EvalMode::floating)
        for (const auto* s : out)
            if (!s->float_mode)
                throw std::invalid_argument("suite '" + s->id + "' has no float mode");
    if (!(cfg.tol > 0)) throw std::invalid_argument("tolerance must be positive");
    return out;
}

struct RunSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;

    int exit_code() const { return failed ? 1 : 0; }
};

/**
 * Runs the selected suites on `cfg.jobs` worker threads and hands every report
 * to `sink` in task order, whatever the completion order. The first exception
 * thrown by a task is rethrown after all workers stop.
 */
inline RunSummary run_suites(const RunConfig& cfg, const std::function<void(const VerificationReport&)>& sink) {
    std::vector<Task> tasks;
    for (const auto* s : select_suites(cfg))
        for (auto& t : s->plan(cfg)) tasks.push_back(std::move(t));

    std::vector<std::optional<std::vector<VerificationReport>>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&] {
        for (std::size_t i; !abort && (i = next++) < tasks.size();) {
            std::optional<std::vector<VerificationReport>> r;
            std::exception_ptr err;
            try {
                r = tasks[i]();
            } catch (...) {
                err = std::current_exception();
                abort = true;
            }
            {
                std::lock_guard lock(mu);
                results[i] = std::move(r);
                errors[i] = err;
                if (!results[i]) results[i].emplace();
            }
            cv.notify_all();
        }
        cv.notify_all();
    };

    const unsigned width = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < width; ++w) pool.emplace_back(worker);

    RunSummary summary;
    std::exception_ptr first_error;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        std::vector<VerificationReport> batch;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return results[i].has_value() || (abort && next >= tasks.size() && !results[i]); });
            if (!results[i]) break;
            if (errors[i]) {
                first_error = errors[i];
                break;
            }
            batch = std::move(*results[i]);
        }
        for (const auto& r : batch) {
            switch (r.status) {
                case Status::pass: ++summary.passed; break;
                case Status::fail: ++summary.failed; break;
                case Status::skipped: ++summary.skipped; break;
            }
            sink(r);
        }
    }
    abort = abort || first_error != nullptr;
    for (auto& t : pool) t.join();
    if (!first_error)
        for (auto& e : errors)
            if (e) {
                first_error = e;
                break;
            }
    if (first_error) std::rethrow_exception(first_error);
    return summary;
}

}  // namespace qcat

#endif  // QCATALAN_HARNESS_HPP
