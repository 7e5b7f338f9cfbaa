/*
   Copyright 2026 The primefourier Authors

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

/**
 * @file cli.hpp
 * @brief Command dispatch and report rendering for the primefourier tool.
 *
 * Every command returns a Report; rendering and exit codes are derived from
 * it. JSON objects use sorted keys, so equal inputs give byte-identical
 * output apart from wall_time_ms.
 */

#ifndef PRIMEFOURIER_TOOLS_CLI_HPP
#define PRIMEFOURIER_TOOLS_CLI_HPP

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <primefourier/primefourier.hpp>

#include "json.hpp"

namespace primefourier::cli {

using json = nlohmann::json;

inline constexpr int schema_version = 1;
inline constexpr const char* max_p_env = "PRIMEFOURIER_MAX_P";

struct RunConfig {
    std::string command;
    std::int64_t p = 0;
    std::optional<unsigned> n;
    std::vector<unsigned> a;
    std::vector<unsigned> b;
    std::uint64_t seed = 0;
    std::string format = "json";
    unsigned jobs = 1;
    unsigned retries = 32;
    std::int64_t budget = 7;  // largest p for certify
    std::int64_t max_p = default_max_prime;
    bool witness = false;
    std::vector<unsigned> exponents;
    std::vector<std::string> coefficients;
    std::string values_file;
};

enum class Status { ok, precondition_error, budget_exceeded, theorem_violation };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::precondition_error: return "precondition-error";
        case Status::budget_exceeded: return "budget-exceeded";
        case Status::theorem_violation: return "theorem-violation";
    }
    return "unknown";
}

inline int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::precondition_error: return 2;
        case Status::budget_exceeded: return 3;
        case Status::theorem_violation: return 4;
    }
    return 1;
}

struct Report {
    std::string command;
    json config = json::object();
    json result;
    json counts = json::object();
    std::string error;
    double wall_time_ms = 0;
    Status status = Status::ok;
    // One row per checked instance for sweeps, otherwise a short table.
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

/// Bound on p: the library default unless PRIMEFOURIER_MAX_P is set.
inline std::int64_t max_p_from_env() {
    const char* v = std::getenv(max_p_env);
    if (v == nullptr || *v == '\0') return default_max_prime;
    try {
        std::size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (used != std::string(v).size() || x < 2) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw precondition_error(std::string(max_p_env) + " must be an integer >= 2");
    }
}

/// "0,2,5" -> {0, 2, 5}; an empty string is the empty list.
inline std::vector<unsigned> parse_residue_list(const std::string& text) {
    std::vector<unsigned> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long x = std::stoll(item, &used);
            if (used != item.size() || x < 0 || x > 0xFFFFFFFFLL) throw std::invalid_argument(item);
            out.push_back(static_cast<unsigned>(x));
        } catch (const std::exception&) {
            throw precondition_error("bad residue '" + item + "' in list '" + text + "'");
        }
    }
    return out;
}

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

/// Lines "x1,...,xn: value"; blank lines and '#' comments skipped, missing
/// points are zero.
inline MultiSignal parse_values(PrimeModulus p, unsigned n, std::istream& in) {
    MultiSignal f(p, n);
    std::vector<bool> seen(f.size());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        const std::string where = "values line " + std::to_string(lineno);
        if (colon == std::string::npos) throw precondition_error(where + ": missing ':'");
        std::string coords = line.substr(0, colon);
        coords.erase(std::remove_if(coords.begin(), coords.end(), ::isspace), coords.end());
        std::string value = line.substr(colon + 1);
        value.erase(std::remove_if(value.begin(), value.end(), ::isspace), value.end());
        const auto point = parse_residue_list(coords);
        if (point.size() != n) throw precondition_error(where + ": expected " + std::to_string(n) + " coordinates");
        Integer v;
        if (value.empty() || v.set_str(value, 10) != 0)
            throw precondition_error(where + ": bad integer value '" + value + "'");
        const std::size_t idx = f.index_of(point);
        if (seen[idx]) throw precondition_error(where + ": duplicate point");
        seen[idx] = true;
        f.set(point, CycloNum(p, Rational(v)));
    }
    return f;
}

namespace detail {

inline json set_json(const SupportSet& s) { return json(std::vector<unsigned>(s.begin(), s.end())); }

inline std::string set_csv(const SupportSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out;
}

inline json signal_json(const SignalFn& f) {
    json arr = json::array();
    for (const auto& v : f.values()) arr.push_back(to_string(v));
    return arr;
}

inline json config_json(const RunConfig& c) {
    json j;
    j["p"] = c.p;
    j["seed"] = c.seed;
    j["format"] = c.format;
    j["jobs"] = c.jobs;
    j["retries"] = c.retries;
    j["max_p"] = c.max_p;
    if (c.command == "certify") j["budget"] = c.budget;
    if (c.command == "construct" || c.command == "sumset") {
        j["a"] = c.a;
        j["b"] = c.b;
    }
    if (c.command == "sumset") j["witness"] = c.witness;
    if (c.command == "sparse") {
        j["exponents"] = c.exponents;
        j["coefficients"] = c.coefficients;
    }
    if (c.command == "meshulam") {
        j["n"] = c.n ? json(*c.n) : json(nullptr);
        j["values_file"] = c.values_file;
    }
    return j;
}

inline void cmd_certify(const RunConfig& c, Report& r) {
    const PrimeModulus p(c.p, c.max_p);
    CertificationOptions opt;
    opt.max_p = c.budget;
    opt.jobs = c.jobs;
    opt.combination.seed = c.seed;
    opt.combination.max_attempts = c.retries;
    opt.record_instances = c.format == "csv";
    const CertificationSummary s = exhaustive_certification(p, opt);
    r.result = {{"p", s.p},
                {"minors_checked", s.minors_checked},
                {"minors_nonzero", s.minors_nonzero},
                {"tightness_checked", s.tightness_checked},
                {"tightness_certified", s.tightness_certified},
                {"achievability_checked", s.achievability_checked},
                {"achievability_ok", s.achievability_ok},
                {"combination_pairs", s.combination_pairs},
                {"max_attempts_used", s.max_attempts_used},
                {"theorem_failures", s.theorem_failures},
                {"budget_failures", s.budget_failures}};
    r.counts = {{"minors", s.minors_checked},
                {"tightness", s.tightness_checked},
                {"achievability", s.achievability_checked}};
    r.csv_header = {"kind", "first", "second", "ok", "attempts"};
    for (const auto& i : s.instances)
        r.csv_rows.push_back(
            {i.kind, set_csv(i.first), set_csv(i.second), i.ok ? "true" : "false", std::to_string(i.attempts)});
    if (!s.theorem_failures.empty()) {
        r.status = Status::theorem_violation;
        r.error = s.theorem_failures.front();
    } else if (!s.budget_failures.empty()) {
        r.status = Status::budget_exceeded;
        r.error = s.budget_failures.front();
    }
}

inline void cmd_construct(const RunConfig& c, Report& r) {
    const PrimeModulus p(c.p, c.max_p);
    const SupportSet A(p, c.a), B(p, c.b);
    const AchievabilityWitness w = construct_support_pair(A, B, {.seed = c.seed, .max_attempts = c.retries});
    const SignalFn fh = dft(w.f);
    json family = json::array();
    for (const auto& [fa, fb] : w.family) family.push_back({{"a", set_json(fa)}, {"b", set_json(fb)}});
    r.result = {{"a", set_json(A)},
                {"b", set_json(B)},
                {"tilde_a", set_json(w.tilde_A)},
                {"f", signal_json(w.f)},
                {"fhat", signal_json(fh)},
                {"supp_f", set_json(support(w.f))},
                {"supp_fhat", set_json(support(fh))},
                {"family", family},
                {"coefficients", w.coefficients},
                {"attempts", w.attempts}};
    r.counts = {{"family_size", w.family.size()}, {"attempts", w.attempts}};
    r.csv_header = {"x", "f", "fhat"};
    for (unsigned x = 0; x < p.value(); ++x) r.csv_rows.push_back({std::to_string(x), to_string(w.f[x]), to_string(fh[x])});
}

inline void cmd_sparse(const RunConfig& c, Report& r) {
    const PrimeModulus p(c.p, c.max_p);
    if (c.exponents.size() != c.coefficients.size())
        throw precondition_error("need one coefficient per exponent");
    std::vector<SparsePoly::Term> terms;
    for (std::size_t j = 0; j < c.exponents.size(); ++j)
        terms.emplace_back(c.exponents[j], parse_cyclonum(p, c.coefficients[j]));
    const SparsePoly poly(p, std::move(terms));
    const SparseZeroReport z = sparse_zero_count(poly);
    r.result = {{"zeros", set_json(z.zeros)},
                {"zero_count", z.zeros.size()},
                {"k", z.k},
                {"bound_holds", z.bound_holds}};
    r.counts = {{"roots_evaluated", p.value()}, {"terms", poly.terms().size()}};
    r.csv_header = {"t", "value", "zero"};
    for (unsigned t = 0; t < p.value(); ++t) {
        const CycloNum v = poly.evaluate_at_root(t);
        r.csv_rows.push_back({std::to_string(t), to_string(v), v.is_zero() ? "true" : "false"});
    }
}

inline void cmd_sumset(const RunConfig& c, Report& r) {
    const PrimeModulus p(c.p, c.max_p);
    const SupportSet A(p, c.a), B(p, c.b);
    const CauchyDavenportReport cd = cauchy_davenport_check(A, B);
    r.result = {{"sumset", set_json(sumset(A, B))},
                {"lhs", cd.lhs},
                {"rhs", cd.rhs},
                {"holds", cd.holds},
                {"inequality", "|A+B| >= min(|A|+|B|-1, p)"}};
    r.csv_header = {"a", "b", "lhs", "rhs", "holds"};
    r.csv_rows.push_back({set_csv(A), set_csv(B), std::to_string(cd.lhs), std::to_string(cd.rhs),
                          cd.holds ? "true" : "false"});
    if (c.witness) {
        const CDWitness w = cd_proof_witness(A, B, {.seed = c.seed, .max_attempts = c.retries});
        r.result["witness"] = {{"x", set_json(w.X)},
                               {"y", set_json(w.Y)},
                               {"x_cap_y", set_json(w.intersection)},
                               {"f", signal_json(w.f)},
                               {"g", signal_json(w.g)},
                               {"conv", signal_json(w.conv)},
                               {"conv_support", set_json(w.conv_support)},
                               {"conv_fourier_support", set_json(w.conv_fourier_support)},
                               {"chain_lhs", w.chain_lhs},
                               {"chain_rhs", w.chain_rhs},
                               {"chain_holds", w.chain_holds}};
    }
    r.counts = {{"pairs_summed", A.size() * B.size()}};
}

inline void cmd_meshulam(const RunConfig& c, Report& r) {
    const PrimeModulus p(c.p, c.max_p);
    if (!c.n) throw precondition_error("meshulam needs --n");
    std::ifstream in(c.values_file);
    if (!in) throw precondition_error("cannot open values file '" + c.values_file + "'");
    const MultiSignal f = parse_values(p, *c.n, in);
    const MeshulamReport m = meshulam_check(f);
    json per_j = json::array();
    r.csv_header = {"j", "lhs", "rhs", "holds"};
    std::int64_t pn = 1;
    for (unsigned d = 0; d < *c.n; ++d) pn *= p.value();
    const std::int64_t rhs = pn + pn / p.value();
    for (unsigned j = 0; j < m.per_j.size(); ++j) {
        std::int64_t pj = 1, pk = 1;
        for (unsigned d = 0; d < j; ++d) pj *= p.value();
        for (unsigned d = 0; d + j + 1 < *c.n; ++d) pk *= p.value();
        const std::int64_t lhs = pj * static_cast<std::int64_t>(m.support_size) +
                                 pk * static_cast<std::int64_t>(m.fourier_support_size);
        per_j.push_back({{"j", j}, {"lhs", lhs}, {"rhs", rhs}, {"holds", static_cast<bool>(m.per_j[j])}});
        r.csv_rows.push_back({std::to_string(j), std::to_string(lhs), std::to_string(rhs),
                              m.per_j[j] ? "true" : "false"});
    }
    r.result = {{"support_size", m.support_size},
                {"fourier_support_size", m.fourier_support_size},
                {"per_j", per_j},
                {"hull_ok", m.hull_ok}};
    r.counts = {{"points", f.size()}};
}

}  // namespace detail

/// Runs one command; library errors become report statuses.
inline Report run(const RunConfig& config) {
    Report r;
    r.command = config.command;
    r.config = detail::config_json(config);
    const auto start = std::chrono::steady_clock::now();
    try {
        if (config.format != "json" && config.format != "csv" && config.format != "text")
            throw precondition_error("unknown format '" + config.format + "'");
        if (config.command == "certify") detail::cmd_certify(config, r);
        else if (config.command == "construct") detail::cmd_construct(config, r);
        else if (config.command == "sparse") detail::cmd_sparse(config, r);
        else if (config.command == "sumset") detail::cmd_sumset(config, r);
        else if (config.command == "meshulam") detail::cmd_meshulam(config, r);
        else throw precondition_error("unknown command '" + config.command + "'");
    } catch (const precondition_error& e) {
        r.status = Status::precondition_error;
        r.error = e.what();
    } catch (const budget_exceeded& e) {
        r.status = Status::budget_exceeded;
        r.error = e.what();
    } catch (const theorem_violation& e) {
        r.status = Status::theorem_violation;
        r.error = e.what();
    }
    if (r.status != Status::ok && r.status != Status::theorem_violation) {
        r.result = nullptr;
        r.csv_rows.clear();
    }
    r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline json to_json(const Report& r) {
    json j;
    j["schema"] = schema_version;
    j["command"] = r.command;
    j["config"] = r.config;
    j["status"] = status_name(r.status);
    j["result"] = r.result;
    j["counts"] = r.counts;
    j["wall_time_ms"] = r.wall_time_ms;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

inline std::string render(const Report& r, const std::string& format) {
    if (format == "csv") {
        std::string out;
        auto line = [&out](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out += ',';
                const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
                out += quote ? "\"" + cells[i] + "\"" : cells[i];
            }
            out += '\n';
        };
        if (r.status != Status::ok) return "status,error\n" + std::string(status_name(r.status)) + ",\"" + r.error + "\"\n";
        line(r.csv_header);
        for (const auto& row : r.csv_rows) line(row);
        return out;
    }
    if (format == "text") {
        std::string out = r.command + ": " + status_name(r.status) + "\n";
        if (!r.error.empty()) out += "error: " + r.error + "\n";
        if (r.result.is_object())
            for (const auto& [k, v] : r.result.items()) out += "  " + k + " = " + v.dump() + "\n";
        return out;
    }
    return to_json(r).dump(2) + "\n";
}

}  // namespace primefourier::cli

#endif  // PRIMEFOURIER_TOOLS_CLI_HPP
