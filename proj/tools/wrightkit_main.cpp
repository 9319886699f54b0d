// Batch CLI: point evaluation, table generation, inequality audit sweeps and
// the Gamma-minimum constants.
//
// Exit codes: 0 success, 1 evaluation error, 2 usage/config error,
// 3 I/O error, 4 audit found a violation of a non-suspect entry.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrightkit/audit.hpp"
#include "wrightkit/audit_io.hpp"
#include "wrightkit/errors.hpp"
#include "wrightkit/gamma.hpp"
#include "wrightkit/series.hpp"

namespace {

using wrightkit::Evaluation;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string now_iso8601() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    bool no_meta = false;
};

wrightkit::SeriesOptions series_options_from_env() {
    wrightkit::SeriesOptions opt;
    if (const char* env = std::getenv("WRIGHTKIT_TERM_BUDGET")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) {
            throw wrightkit::ConfigError(
                "WRIGHTKIT_TERM_BUDGET must be a positive integer, got '" +
                std::string(env) + "'");
        }
        opt.term_budget = static_cast<int>(v);
    }
    return opt;
}

wrightkit::GammaPair parse_pair(const std::string& s, const char* flag) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        throw wrightkit::ConfigError(std::string(flag) + " expects '<a>:<b>', got '" + s + "'");
    }
    try {
        const double first = std::stod(s.substr(0, colon));
        const double second = std::stod(s.substr(colon + 1));
        return {first, second};
    } catch (const std::exception&) {
        throw wrightkit::ConfigError(std::string(flag) + " expects numbers '<a>:<b>', got '" +
                                     s + "'");
    }
}

struct FuncArgs {
    std::string func;
    std::optional<double> alpha, beta, gamma, sigma;
    std::optional<double> B1, beta1, B2, beta2;
    std::vector<std::string> upper, lower, ml_pairs;
    bool negate_z = false;
};

void add_func_options(CLI::App* cmd, FuncArgs& fa) {
    cmd->add_option("--func", fa.func,
                    "Function selector: wright | gen-wright | fox-wright | ml | ml4")
        ->required();
    cmd->add_option("--alpha", fa.alpha, "alpha parameter");
    cmd->add_option("--beta", fa.beta, "beta parameter");
    cmd->add_option("--gamma", fa.gamma, "gamma parameter (gen-wright)");
    cmd->add_option("--sigma", fa.sigma, "sigma parameter (gen-wright)");
    cmd->add_option("--B1", fa.B1, "first pair weight (ml4)");
    cmd->add_option("--beta1", fa.beta1, "first pair offset (ml4)");
    cmd->add_option("--B2", fa.B2, "second pair weight (ml4)");
    cmd->add_option("--beta2", fa.beta2, "second pair offset (ml4)");
    cmd->add_option("--upper", fa.upper, "fox-wright upper pair '<a>:<alpha>' (repeatable)");
    cmd->add_option("--lower", fa.lower, "fox-wright lower pair '<b>:<beta>' (repeatable)");
    cmd->add_option("--pair", fa.ml_pairs, "mittag-leffler pair '<B>:<beta>' (repeatable)");
    cmd->add_flag("--negate-z", fa.negate_z, "evaluate at -z (W(-z) tables)");
}

double need(const std::optional<double>& v, const char* name) {
    if (!v) throw wrightkit::ConfigError(std::string("missing required --") + name);
    return *v;
}

// Build the z -> Evaluation closure for the selected function.
std::function<Evaluation(double)> make_evaluator(const FuncArgs& fa,
                                                 const wrightkit::SeriesOptions& opt) {
    const bool neg = fa.negate_z;
    auto wrap = [neg](std::function<Evaluation(double)> f) {
        if (!neg) return f;
        return std::function<Evaluation(double)>([f](double z) { return f(-z); });
    };
    if (fa.func == "wright") {
        wrightkit::WrightParams p{need(fa.alpha, "alpha"), need(fa.beta, "beta")};
        return wrap([p, opt](double z) { return wrightkit::wright(p, z, opt); });
    }
    if (fa.func == "gen-wright") {
        wrightkit::GenWrightParams p{need(fa.alpha, "alpha"), need(fa.beta, "beta"),
                                     need(fa.gamma, "gamma"), need(fa.sigma, "sigma")};
        return wrap([p, opt](double z) { return wrightkit::gen_wright(p, z, opt); });
    }
    if (fa.func == "fox-wright") {
        wrightkit::FoxWrightSpec s;
        for (const auto& u : fa.upper) s.upper.push_back(parse_pair(u, "--upper"));
        for (const auto& l : fa.lower) s.lower.push_back(parse_pair(l, "--lower"));
        return wrap([s, opt](double z) { return wrightkit::fox_wright(s, z, opt); });
    }
    if (fa.func == "ml") {
        wrightkit::MittagLefflerSpec s;
        for (const auto& pr : fa.ml_pairs) {
            const auto bw = parse_pair(pr, "--pair");  // <B>:<beta>
            s.pairs.push_back({bw.weight, bw.offset});
        }
        return wrap([s, opt](double z) { return wrightkit::mittag_leffler(s, z, opt); });
    }
    if (fa.func == "ml4") {
        const double b1w = need(fa.B1, "B1"), b1o = need(fa.beta1, "beta1");
        const double b2w = need(fa.B2, "B2"), b2o = need(fa.beta2, "beta2");
        return wrap([=](double z) {
            return wrightkit::ml4(b1w, b1o, b2w, b2o, z, opt);
        });
    }
    throw wrightkit::ConfigError("unknown --func '" + fa.func +
                                 "' (expected wright | gen-wright | fox-wright | ml | ml4)");
}

int run_eval(const FuncArgs& fa, double z) {
    const auto opt = series_options_from_env();
    const auto eval = make_evaluator(fa, opt);
    const Evaluation ev = eval(z);
    std::cout << fmt17(ev.value) << " ± " << fmt17(ev.abs_error_estimate) << " (terms="
              << ev.terms_used << ", method="
              << (ev.method == wrightkit::EvalMethod::series ? "series" : "integral")
              << ")\n";
    return 0;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::ios_base::failure("cannot open output file '" + path + "'");
    return file;
}

int run_table(const FuncArgs& fa, double from, double to, int steps,
              const CommonOpts& common) {
    if (steps < 2) throw wrightkit::ConfigError("table requires --steps >= 2");
    if (!(from <= to)) throw wrightkit::ConfigError("table requires --from <= --to");
    const auto opt = series_options_from_env();
    const auto eval = make_evaluator(fa, opt);

    std::vector<std::array<double, 3>> rows;
    rows.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double z = from + (to - from) * i / double(steps - 1);
        const Evaluation ev = eval(z);
        rows.push_back({z, ev.value, ev.abs_error_estimate});
    }

    std::ofstream file;
    std::ostream& os = open_out(file, common.out_path);
    if (common.format == "json") {
        nlohmann::ordered_json doc;
        if (!common.no_meta) {
            doc["meta"] = {{"tool", "wrightkit"},
                           {"command", "table"},
                           {"generated_at", now_iso8601()}};
        }
        auto& arr = doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back({{"z", r[0]}, {"value", r[1]}, {"error_estimate", r[2]}});
        }
        os << doc.dump(2) << "\n";
    } else if (common.format == "csv" || common.format == "text") {
        if (!common.no_meta) os << "# wrightkit table generated-at " << now_iso8601() << "\n";
        os << "z,value,error_estimate\n";
        for (const auto& r : rows) {
            os << fmt17(r[0]) << "," << fmt17(r[1]) << "," << fmt17(r[2]) << "\n";
        }
    } else {
        throw wrightkit::ConfigError("unknown --format '" + common.format + "'");
    }
    if (!os) throw std::ios_base::failure("write failed");
    return 0;
}

int run_audit(const std::string& ids_csv, const std::string& out_prefix,
              const CommonOpts& common) {
    std::vector<wrightkit::InequalityId> ids;
    if (ids_csv.empty()) {
        ids = wrightkit::all_inequality_ids();
    } else {
        std::stringstream ss(ids_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            const auto id = wrightkit::inequality_id_from_string(tok);
            if (!id) throw wrightkit::ConfigError("unknown inequality id '" + tok + "'");
            ids.push_back(*id);
        }
        if (ids.empty()) throw wrightkit::ConfigError("--ids resolved to an empty list");
    }

    const auto grid = wrightkit::GridSpec::default_grid();
    const auto report = wrightkit::audit_sweep(ids, grid);

    const std::string jsonl_path = out_prefix + ".jsonl";
    const std::string csv_path = out_prefix + ".csv";
    {
        std::ofstream jf(jsonl_path);
        if (!jf) throw std::ios_base::failure("cannot open '" + jsonl_path + "'");
        if (!common.no_meta) {
            nlohmann::ordered_json meta;
            meta["meta"] = {{"tool", "wrightkit"},
                            {"command", "audit"},
                            {"generated_at", now_iso8601()}};
            jf << meta.dump() << "\n";
        }
        wrightkit::write_jsonl(report, jf);
        if (!jf) throw std::ios_base::failure("write failed on '" + jsonl_path + "'");
    }
    {
        std::ofstream cf(csv_path);
        if (!cf) throw std::ios_base::failure("cannot open '" + csv_path + "'");
        if (!common.no_meta) cf << "# wrightkit audit generated-at " << now_iso8601() << "\n";
        wrightkit::write_csv_summary(report, cf);
        if (!cf) throw std::ios_base::failure("write failed on '" + csv_path + "'");
    }

    int asserted_violations = 0;
    int suspect_violations = 0;
    for (const auto& s : report.summaries) {
        const int v = s.violated + s.neg_z_violated;
        if (wrightkit::audit_class(s.id) == wrightkit::AuditClass::suspect) {
            suspect_violations += v;
        } else {
            asserted_violations += v;
        }
    }
    std::cout << "audit: " << report.records.size() << " records over "
              << report.summaries.size() << " entries; " << asserted_violations
              << " non-suspect violation(s), " << suspect_violations
              << " suspect-class violation(s)\n"
              << "records: " << jsonl_path << "\nsummary: " << csv_path << "\n";
    return asserted_violations > 0 ? 4 : 0;
}

int run_constants(const CommonOpts& common) {
    const auto c = wrightkit::find_gamma_min();
    if (common.format == "json") {
        nlohmann::ordered_json j;
        j["x_star"] = c.x_star;
        j["gamma_at_x_star"] = c.gamma_at_x_star;
        std::cout << j.dump() << "\n";
    } else {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12f", c.x_star);
        std::cout << "x_star = " << buf << "\n";
        std::snprintf(buf, sizeof(buf), "%.12f", c.gamma_at_x_star);
        std::cout << "gamma(x_star) = " << buf << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wrightkit: Wright / Fox-Wright / Mittag-Leffler evaluation and "
                 "inequality audit"};
    app.require_subcommand(1);

    FuncArgs fa_eval, fa_table;
    double eval_z = 0.0;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one function at one point");
    add_func_options(eval_cmd, fa_eval);
    eval_cmd->add_option("--z", eval_z, "argument z")->required();

    double tab_from = 0.0, tab_to = 1.0;
    int tab_steps = 11;
    CommonOpts tab_common;
    auto* table_cmd = app.add_subcommand("table", "Tabulate a function over a z range");
    add_func_options(table_cmd, fa_table);
    table_cmd->add_option("--from", tab_from, "range start")->required();
    table_cmd->add_option("--to", tab_to, "range end")->required();
    table_cmd->add_option("--steps", tab_steps, "row count (>= 2)")->required();
    table_cmd->add_option("--format", tab_common.format, "csv | json | text");
    table_cmd->add_option("--out", tab_common.out_path, "output file (default stdout)");
    table_cmd->add_flag("--no-meta", tab_common.no_meta,
                        "omit the timestamped metadata header");

    std::string audit_ids, audit_prefix = "wrightkit_audit";
    CommonOpts audit_common;
    bool audit_default_grid = false;
    auto* audit_cmd = app.add_subcommand("audit", "Sweep the inequality catalog");
    audit_cmd->add_option("--ids", audit_ids, "comma-separated entry names (default: all)");
    audit_cmd->add_option("--out-prefix", audit_prefix,
                          "output prefix; writes <prefix>.jsonl and <prefix>.csv");
    audit_cmd->add_flag("--default-grid", audit_default_grid,
                        "sweep the built-in default grid (this is also the default)");
    audit_cmd->add_flag("--no-meta", audit_common.no_meta,
                        "omit the timestamped metadata headers");

    CommonOpts const_common;
    auto* const_cmd = app.add_subcommand("constants", "Print the Gamma-minimum constants");
    const_cmd->add_option("--format", const_common.format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*eval_cmd) return run_eval(fa_eval, eval_z);
        if (*table_cmd) return run_table(fa_table, tab_from, tab_to, tab_steps, tab_common);
        if (*audit_cmd) return run_audit(audit_ids, audit_prefix, audit_common);
        if (*const_cmd) return run_constants(const_common);
    } catch (const wrightkit::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const wrightkit::Error& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
