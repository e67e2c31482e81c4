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

#ifndef QCATALAN_REPORT_HPP
#define QCATALAN_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qcat {

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

/// Named integer parameters, kept in insertion order so rendering is stable.
using Params = std::vector<std::pair<std::string, std::int64_t>>;

/**
 * Outcome of one check.
 *
 * Invariants: a failing report carries a witness (the nonzero residue or the
 * offending magnitude); a passing report carries none.
 */
struct VerificationReport {
    std::string suite;
    Params params;
    Status status = Status::skipped;
    std::optional<std::string> witness;
    std::optional<std::string> note;
    double elapsed_ms = 0.0;

    bool passed() const { return status == Status::pass; }

    std::int64_t param(const std::string& name) const {
        for (const auto& [k, v] : params)
            if (k == name) return v;
        throw std::out_of_range("VerificationReport: no parameter '" + name + "'");
    }
};

/// Wall-clock timer started at construction.
class Stopwatch {
  public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline VerificationReport make_pass(std::string suite, Params params, const Stopwatch& sw) {
    return {std::move(suite), std::move(params), Status::pass, std::nullopt, std::nullopt, sw.elapsed_ms()};
}

inline VerificationReport make_fail(std::string suite, Params params, std::string witness, const Stopwatch& sw) {
    if (witness.empty() || witness == "0") throw std::logic_error("failing report needs a nonzero witness");
    return {std::move(suite), std::move(params), Status::fail, std::move(witness), std::nullopt, sw.elapsed_ms()};
}

inline VerificationReport make_skipped(std::string suite, Params params, std::string reason, const Stopwatch& sw) {
    return {std::move(suite), std::move(params), Status::skipped, std::nullopt, std::move(reason), sw.elapsed_ms()};
}

/// One JSON-lines record: {suite, params, status, witness?, note?, elapsed_ms}.
inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["status"] = to_string(r.status);
    if (r.witness) j["witness"] = *r.witness;
    if (r.note) j["note"] = *r.note;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline std::string to_json_line(const VerificationReport& r) { return to_json(r).dump(); }

}  // namespace qcat

#endif  // QCATALAN_REPORT_HPP
