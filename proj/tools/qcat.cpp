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

// qcat: command-line front end. Exit status 0 when every check passes,
// 1 when any fails, 2 on usage, parse or evaluation errors.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qcatalan/qcatalan.hpp"

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::int64_t parse_int(const std::string& text, const char* what) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
    return v;
}

qcat::dsl::Bindings parse_bindings(const std::vector<std::string>& items) {
    qcat::dsl::Bindings b;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--set expects name=value, got '" + item + "'");
        b[item.substr(0, eq)] = parse_int(item.substr(eq + 1), "--set");
    }
    return b;
}

int cmd_chars(std::int64_t m) {
    const auto chars = qcat::character_group(m);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto& chi = chars[i];
        std::ostringstream line;
        line << "chi" << i << " exponents=[";
        for (std::size_t f = 0; f < chi.exponents().size(); ++f) line << (f ? "," : "") << chi.exponents()[f];
        line << "] order=" << chi.order() << " values:";
        for (std::int64_t a = 1; a < m; ++a) line << ' ' << a << ':' << qcat::char_value_string(chi, a);
        std::cout << line.str() << '\n';
    }
    return 0;
}

int cmd_eval(const std::string& text, bool poly, const std::vector<std::int64_t>& root, const std::vector<std::string>& sets) {
    const auto expr = qcat::dsl::parse(text);
    const auto bindings = parse_bindings(sets);
    if (poly == !root.empty()) throw UsageError("eval: give exactly one of --poly or --root m j");
    if (poly) {
        std::cout << qcat::to_string(qcat::dsl::eval_poly(expr, bindings)) << '\n';
    } else {
        std::cout << qcat::to_string(qcat::dsl::eval_cyclo(expr, root[0], root[1], bindings)) << '\n';
    }
    return 0;
}

struct VerifyOptions {
    std::string suite;
    std::optional<std::int64_t> n, n_max;
    std::string j = "all";
    std::string mode = "exact";
    double tol = 1e-9;
    bool json = false;
    std::string out;
    unsigned jobs = 0;
    std::string corpus;
    std::uint64_t seed = qcat::kDefaultSeed;
};

std::string text_line(const qcat::VerificationReport& r) {
    std::ostringstream s;
    s << (r.status == qcat::Status::pass ? "PASS" : r.status == qcat::Status::fail ? "FAIL" : "SKIP") << ' ' << r.suite;
    for (const auto& [k, v] : r.params) s << ' ' << k << '=' << v;
    if (r.note) s << " [" << *r.note << ']';
    if (r.witness) s << " : " << *r.witness;
    return s.str();
}

int cmd_verify(const VerifyOptions& o) {
    qcat::RunConfig cfg;
    cfg.suites = {o.suite};
    cfg.n = o.n;
    cfg.n_max = o.n_max;
    if (o.j != "all") cfg.j = parse_int(o.j, "--j");
    if (o.mode == "exact") cfg.mode = qcat::EvalMode::exact;
    else if (o.mode == "float") cfg.mode = qcat::EvalMode::floating;
    else throw UsageError("--mode must be exact or float");
    cfg.tol = o.tol;
    cfg.jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    if (!o.corpus.empty()) cfg.corpus_path = o.corpus;
    cfg.seed = o.seed;
    qcat::select_suites(cfg);  // usage errors before any output

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary);
        if (!file) throw UsageError("cannot open " + o.out + " for writing");
    }
    const auto summary = qcat::run_suites(cfg, [&](const qcat::VerificationReport& r) {
        if (file.is_open()) file << qcat::to_json_line(r) << '\n';
        if (o.json) std::cout << qcat::to_json_line(r) << '\n';
        else std::cout << text_line(r) << '\n';
    });
    std::cerr << o.suite << ": " << summary.passed << " passed, " << summary.failed << " failed, " << summary.skipped << " skipped\n";
    return summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of q-Catalan congruences and root-of-unity identities"};
    app.require_subcommand(1);

    std::int64_t a = 0, b = 0;
    auto* phi = app.add_subcommand("phi", "Print the cyclotomic polynomial Phi_n(q)");
    phi->add_option("n", a)->required();
    auto* qbin = app.add_subcommand("qbin", "Print the Gaussian binomial [n, k]");
    qbin->add_option("n", a)->required();
    qbin->add_option("k", b)->required();
    auto* qcatc = app.add_subcommand("qcat", "Print the q-Catalan polynomial C_k(q)");
    qcatc->add_option("k", a)->required();
    auto* csum = app.add_subcommand("catalan-sum", "Print sum_{k<n} q^k C_k(q)");
    csum->add_option("n", a)->required();
    auto* chars = app.add_subcommand("chars", "List the Dirichlet characters modulo an odd m >= 3");
    chars->add_option("--modulus", a, "Modulus m")->required();

    std::string expr;
    bool poly = false;
    std::vector<std::int64_t> root;
    std::vector<std::string> sets;
    auto* eval = app.add_subcommand("eval", "Evaluate a q-expression");
    eval->add_option("expr", expr)->required();
    auto* poly_flag = eval->add_flag("--poly", poly, "Evaluate in Q[q]");
    eval->add_option("--root", root, "Evaluate at q = zeta_m^j")->expected(2)->excludes(poly_flag);
    eval->add_option("--set", sets, "Integer binding name=value")->take_all();

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run a verification suite over its parameter sweep");
    verify->add_option("suite", vo.suite, "Suite id or 'all'")->required();
    verify->add_option("--n", vo.n, "Single value of the main parameter");
    verify->add_option("--n-max", vo.n_max, "Upper end of the sweep");
    verify->add_option("--j", vo.j, "all or a specific j");
    verify->add_option("--mode", vo.mode, "exact or float");
    verify->add_option("--tol", vo.tol, "Float tolerance");
    verify->add_flag("--json", vo.json, "Write JSON lines to stdout");
    verify->add_option("--out", vo.out, "Write JSON lines to a file");
    verify->add_option("--jobs", vo.jobs, "Worker threads (default: hardware concurrency)");
    verify->add_option("--corpus", vo.corpus, "Identity corpus for dsl-corpus");
    verify->add_option("--seed", vo.seed, "Seed for sampled suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*phi) {
            if (a < 1) throw UsageError("phi: n must be >= 1");
            std::cout << qcat::to_string(qcat::cyclotomic_poly(a)) << '\n';
        } else if (*qbin) {
            std::cout << qcat::to_string(qcat::gaussian_binomial(a, b)) << '\n';
        } else if (*qcatc) {
            std::cout << qcat::to_string(qcat::q_catalan(a)) << '\n';
        } else if (*csum) {
            std::cout << qcat::to_string(qcat::catalan_sum(a)) << '\n';
        } else if (*chars) {
            return cmd_chars(a);
        } else if (*eval) {
            return cmd_eval(expr, poly, root, sets);
        } else if (*verify) {
            return cmd_verify(vo);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "qcat: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        std::cerr << "qcat: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        std::cerr << "qcat: " << e.what() << '\n';
        return kUsageError;
    } catch (const qcat::dsl::EvalError& e) {
        std::cerr << "qcat: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "qcat: internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
