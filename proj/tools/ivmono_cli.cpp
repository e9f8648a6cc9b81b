// Command-line front end: run a monotonicity check, validate an order's
// admissibility, or run the built-in instance suites.
//
// Exit codes: 0 verified/vacuous (or suite pass), 1 counterexample (or
// validation/suite failure), 2 usage or contract errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivmono/ivmono.hpp"

namespace {

using namespace ivmono;

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) out += ' ';
        out += argv[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
        if (p == std::string::npos) break;
        start = p + 1;
    }
    return out;
}

double parse_real(const std::string& s, const std::string& flag) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw BadParamsError(flag + ": bad number '" + s + "'");
    }
}

RealPairDirection parse_direction(const std::string& text) {
    std::vector<std::pair<double, double>> pairs;
    for (const auto& part : split(text, ';')) {
        const auto ab = split(part, ',');
        if (ab.size() != 2)
            throw BadParamsError("--direction: expected 'a,b' pairs joined by ';', got '" +
                                 part + "'");
        pairs.emplace_back(parse_real(ab[0], "--direction"), parse_real(ab[1], "--direction"));
    }
    return RealPairDirection(std::move(pairs));
}

DegenerateDirection parse_direction_deg(const std::string& text) {
    std::vector<double> vals;
    for (const auto& part : split(text, ','))
        vals.push_back(parse_real(part, "--direction-deg"));
    return DegenerateDirection(std::move(vals));
}

void print_witness(std::ostream& os, const Witness& w) {
    auto vec = [](const IntervalVector& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
        return s + ")";
    };
    os << "  witness:\n";
    os << "    base point: " << vec(w.base) << "\n";
    switch (w.param.kind) {
        case ShiftParam::Kind::Pair: break;
        case ShiftParam::Kind::Scalar: os << "    shift c: " << w.param.c << "\n"; break;
        case ShiftParam::Kind::Shift:
            os << "    shift C: " << to_string(*w.param.interval) << "\n";
            break;
        case ShiftParam::Kind::Lambda:
            os << "    lambda: " << to_string(*w.param.interval) << "\n";
            break;
    }
    os << "    after:      " << vec(w.shifted) << "\n";
    os << "    F(before) = " << to_string(w.f_before) << ", F(after) = " << to_string(w.f_after)
       << " (" << to_string(w.relation) << ")\n";
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write report to '" + path + "'");
    out << doc.dump(2) << "\n";
}

struct CheckArgs {
    std::string function;
    int arity = 2;
    std::string order;
    std::string property;
    std::string direction;
    std::string direction_deg;
    std::string g_spec;
    std::string json_path;
    SamplingConfig cfg;
};

int run_check(const CheckArgs& a, const std::string& command) {
    const auto t0 = std::chrono::steady_clock::now();
    const OrderSpec order = OrderSpec::from_name(a.order);
    const IVFunction f = function_from_spec(a.function, a.arity);

    const bool dec = a.property.size() >= 3 &&
                     a.property.compare(a.property.size() - 3, 3, "dec") == 0;
    const Sense sense = dec ? Sense::Decreasing : Sense::Increasing;

    CheckResult result;
    if (a.property == "increasing" || a.property == "decreasing") {
        result = check_increasing(f, order, a.cfg, sense);
    } else if (a.property == "weak-inc" || a.property == "weak-dec") {
        if (order.is_total()) {
            result = check_weak_adm(f, order, a.cfg, sense);
        } else {
            if (a.direction.empty())
                throw BadParamsError(
                    "--direction: weak monotonicity under km needs one 'a,b' pair");
            const RealPairDirection d = parse_direction(a.direction);
            if (d.arity() != 1)
                throw BadParamsError("--direction: weak monotonicity takes exactly one pair");
            result = check_weak_km(f, d.pairs()[0], a.cfg, sense);
        }
    } else if (a.property == "dir-inc" || a.property == "dir-dec") {
        if (order.is_total()) {
            if (a.direction_deg.empty())
                throw BadParamsError(
                    "--direction-deg: directional monotonicity under a total order needs "
                    "degenerate shift values v1,...,vn");
            result = check_directional_adm(f, parse_direction_deg(a.direction_deg), order,
                                           a.cfg, sense);
        } else {
            if (a.direction.empty())
                throw BadParamsError(
                    "--direction: directional monotonicity under km needs pairs "
                    "a1,b1;...;an,bn");
            result = check_directional_km(f, parse_direction(a.direction), a.cfg, sense);
        }
    } else if (a.property == "g-weak-inc" || a.property == "g-weak-dec") {
        if (a.g_spec.empty())
            throw BadParamsError("--g: G-weak monotonicity needs a transform function");
        IVFunction g = function_from_spec(a.g_spec, 2);
        result = check_g_weak(f, g, order, a.cfg, sense);
    } else {
        throw BadParamsError("--property: unknown property '" + a.property + "'");
    }

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

    Report rep;
    rep.command = command;
    rep.function = f.description();
    rep.order = order.name();
    rep.property = a.property;
    rep.result = result;
    rep.timing_ms = ms;

    std::cout << "function: " << rep.function << " (arity " << f.arity() << ")\n";
    std::cout << "order:    " << rep.order << "\n";
    std::cout << "property: " << rep.property << "\n";
    std::cout << "status:   " << to_string(result.status) << "\n";
    std::cout << "points_checked: " << result.points_checked
              << "  comparisons_failed: " << result.comparisons_failed
              << "  shifts_skipped: " << result.shifts_skipped << "\n";
    if (result.witness) print_witness(std::cout, *result.witness);

    if (!a.json_path.empty()) write_json_file(a.json_path, to_json(rep));
    return result.status == CheckStatus::Counterexample ? 1 : 0;
}

int run_verify(const SamplingConfig& cfg, const std::string& json_path,
               const std::string& command) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto suites = run_instance_suites(cfg);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

    bool all = true;
    for (const auto& s : suites) {
        std::int64_t asserted = 0, recorded = 0;
        for (const auto& c : s.cases) (c.asserted ? asserted : recorded)++;
        std::cout << (s.pass ? "PASS " : "FAIL ") << s.name << " (" << asserted
                  << " asserted, " << recorded << " recorded)\n";
        if (!s.pass) {
            for (const auto& c : s.cases)
                if (c.asserted && !c.ok) {
                    std::cout << "  failed: " << c.function << " / " << c.order << " / "
                              << c.property << " -> " << to_string(c.status) << "\n";
                    if (c.witness) print_witness(std::cout, *c.witness);
                }
        }
        all = all && s.pass;
    }
    std::cout << (all ? "all suites passed" : "suite failures present") << "\n";

    if (!json_path.empty())
        write_json_file(json_path, suites_report_json(command, cfg, suites, ms));
    return all ? 0 : 1;
}

int run_orders_validate(const std::string& order_name, const SamplingConfig& cfg) {
    const OrderSpec order = OrderSpec::from_name(order_name);
    const AdmissibilityReport rep = is_admissible(order, cfg);

    std::cout << "order: " << rep.order_name << "\n";
    std::cout << "intervals_sampled: " << rep.intervals_sampled
              << "  pairs_checked: " << rep.pairs_checked
              << "  triples_checked: " << rep.triples_checked << "\n";
    std::cout << "totality_violations:     " << rep.totality_violations << "\n";
    std::cout << "antisymmetry_violations: " << rep.antisymmetry_violations << "\n";
    std::cout << "transitivity_violations: " << rep.transitivity_violations << "\n";
    std::cout << "refinement_violations:   " << rep.refinement_violations << "\n";
    std::cout << "separation_violations:   " << rep.separation_violations << "\n";
    for (const auto& w : rep.witnesses) {
        std::cout << "  " << w.category << ": ";
        for (std::size_t i = 0; i < w.intervals.size(); ++i)
            std::cout << (i ? ", " : "") << to_string(w.intervals[i]);
        std::cout << " -- " << w.detail << "\n";
    }
    std::cout << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval monotonicity checker"};
    app.require_subcommand(1);
    const std::string command = join_args(argc, argv);

    CheckArgs check_args;
    std::string verify_json;
    SamplingConfig verify_cfg;
    std::string validate_order;
    SamplingConfig validate_cfg;

    auto add_sampling_flags = [](CLI::App* cmd, SamplingConfig& cfg, bool full) {
        cmd->add_option("--grid-step", cfg.grid_step, "endpoint grid pitch (must divide 1)");
        cmd->add_option("--random", cfg.random_count, "extra seeded random intervals");
        cmd->add_option("--seed", cfg.seed, "sampling seed");
        if (full) {
            cmd->add_option("--shifts", cfg.shift_count, "shift samples per base point");
            cmd->add_flag("--degenerate-shifts", cfg.degenerate_shifts,
                          "restrict weak-monotonicity shifts to [c,c]");
            cmd->add_flag("--exclude-zero-lambda", cfg.exclude_zero_lambda,
                          "exclude the [0,0] transform argument");
        }
    };

    CLI::App* check = app.add_subcommand("check", "check one monotonicity property");
    check->add_option("--function", check_args.function, "builtin name or DSL expression")
        ->required();
    check->add_option("--arity", check_args.arity, "number of interval arguments")->required();
    check->add_option("--order", check_args.order,
                      "km | lex-lower | lex-upper | xu-yager | two-key:<k1>,<k2>")
        ->required();
    check->add_option("--property", check_args.property,
                      "increasing | decreasing | weak-inc | weak-dec | dir-inc | dir-dec | "
                      "g-weak-inc | g-weak-dec")
        ->required();
    check->add_option("--direction", check_args.direction, "real pairs a1,b1;...;an,bn");
    check->add_option("--direction-deg", check_args.direction_deg,
                      "degenerate shift values v1,...,vn");
    check->add_option("--g", check_args.g_spec, "transform function for g-weak properties");
    check->add_option("--json", check_args.json_path, "write the report to this path");
    add_sampling_flags(check, check_args.cfg, true);

    CLI::App* verify = app.add_subcommand("verify-paper", "run the instance-property suites");
    verify->add_option("--json", verify_json, "write the suite report to this path");
    add_sampling_flags(verify, verify_cfg, false);

    CLI::App* orders = app.add_subcommand("orders", "order utilities");
    orders->require_subcommand(1);
    CLI::App* validate = orders->add_subcommand("validate", "validate an order's admissibility");
    validate->add_option("--order", validate_order, "order name")->required();
    add_sampling_flags(validate, validate_cfg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return run_check(check_args, command);
        if (*verify) return run_verify(verify_cfg, verify_json, command);
        if (*validate) return run_orders_validate(validate_order, validate_cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
