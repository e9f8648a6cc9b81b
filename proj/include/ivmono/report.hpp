#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ivmono/admissibility.hpp"
#include "ivmono/check.hpp"
#include "ivmono/interval.hpp"
#include "ivmono/sampling.hpp"
#include "ivmono/suites.hpp"

namespace ivmono {

inline constexpr std::string_view kVersion = "0.1.0";

// All machine-readable output goes through nlohmann's order-preserving
// document type so serialization is byte-stable.
using json = nlohmann::ordered_json;

inline json to_json(const Interval& x) { return json::array({x.lo(), x.hi()}); }

inline json to_json(const IntervalVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

inline json to_json(const SamplingConfig& cfg) {
    return json{{"grid_step", cfg.grid_step},
                {"random_count", cfg.random_count},
                {"shift_count", cfg.shift_count},
                {"seed", cfg.seed},
                {"eps_cmp", cfg.eps_cmp},
                {"degenerate_shifts", cfg.degenerate_shifts},
                {"exclude_zero_lambda", cfg.exclude_zero_lambda}};
}

inline json to_json(const ShiftParam& p) {
    switch (p.kind) {
        case ShiftParam::Kind::Pair:
            return json{{"kind", "pair"}};
        case ShiftParam::Kind::Scalar:
            return json{{"kind", "scalar"}, {"c", p.c}};
        case ShiftParam::Kind::Shift:
            return json{{"kind", "shift"}, {"interval", to_json(*p.interval)}};
        case ShiftParam::Kind::Lambda:
            return json{{"kind", "lambda"}, {"interval", to_json(*p.interval)}};
    }
    return json{{"kind", "?"}};
}

inline json to_json(const Witness& w) {
    return json{{"base", to_json(w.base)},
                {"shift", to_json(w.param)},
                {"shifted", to_json(w.shifted)},
                {"f_before", to_json(w.f_before)},
                {"f_after", to_json(w.f_after)},
                {"relation", std::string(to_string(w.relation))}};
}

// A single check invocation, flattened for the CLI.
struct Report {
    std::string command;
    std::string function;
    std::string order;
    std::string property;
    CheckResult result;
    std::int64_t timing_ms = 0;
};

inline json to_json(const Report& r) {
    json out;
    out["version"] = std::string(kVersion);
    out["command"] = r.command;
    out["function"] = r.function;
    out["order"] = r.order;
    out["property"] = r.property;
    out["status"] = std::string(to_string(r.result.status));
    out["witness"] = r.result.witness ? to_json(*r.result.witness) : json(nullptr);
    out["points_checked"] = r.result.points_checked;
    out["comparisons_failed"] = r.result.comparisons_failed;
    out["shifts_skipped"] = r.result.shifts_skipped;
    out["config"] = to_json(r.result.config);
    out["timing_ms"] = r.timing_ms;
    return out;
}

inline json to_json(const SuiteCase& c) {
    json out;
    out["function"] = c.function;
    out["order"] = c.order;
    out["property"] = c.property;
    out["status"] = std::string(to_string(c.status));
    out["asserted"] = c.asserted;
    out["ok"] = c.ok;
    out["note"] = c.note;
    out["points_checked"] = c.points_checked;
    out["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
    return out;
}

inline json to_json(const SuiteResult& s) {
    json cases = json::array();
    for (const auto& c : s.cases) cases.push_back(to_json(c));
    return json{{"name", s.name}, {"pass", s.pass}, {"cases", std::move(cases)}};
}

inline json suites_report_json(const std::string& command, const SamplingConfig& cfg,
                               const std::vector<SuiteResult>& suites, std::int64_t timing_ms) {
    bool all = true;
    json arr = json::array();
    for (const auto& s : suites) {
        all = all && s.pass;
        arr.push_back(to_json(s));
    }
    json out;
    out["version"] = std::string(kVersion);
    out["command"] = command;
    out["config"] = to_json(cfg);
    out["suites"] = std::move(arr);
    out["overall_pass"] = all;
    out["timing_ms"] = timing_ms;
    return out;
}

inline json to_json(const AdmissibilityReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
        json ws = json::array();
        for (const auto& x : w.intervals) ws.push_back(to_json(x));
        witnesses.push_back(json{{"category", w.category},
                                 {"intervals", std::move(ws)},
                                 {"detail", w.detail}});
    }
    json out;
    out["order"] = r.order_name;
    out["intervals_sampled"] = r.intervals_sampled;
    out["pairs_checked"] = r.pairs_checked;
    out["triples_checked"] = r.triples_checked;
    out["totality_violations"] = r.totality_violations;
    out["antisymmetry_violations"] = r.antisymmetry_violations;
    out["transitivity_violations"] = r.transitivity_violations;
    out["refinement_violations"] = r.refinement_violations;
    out["separation_violations"] = r.separation_violations;
    out["witnesses"] = std::move(witnesses);
    out["pass"] = r.pass;
    return out;
}

}  // namespace ivmono
