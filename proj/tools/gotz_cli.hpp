#ifndef GOTZ_TOOLS_GOTZ_CLI_HPP
#define GOTZ_TOOLS_GOTZ_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gotz/gotz.hpp>

namespace gotz::cli
{

// Exit statuses shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_error = 2;

struct common_options {
    std::size_t nvars = 4;
    std::size_t cap = default_enumeration_cap;
    std::size_t workers = 1;
    std::string format = "plain";
};

inline output_format parse_format(const std::string &s)
{
    if (s == "plain") {
        return output_format::plain;
    }
    if (s == "json") {
        return output_format::json;
    }
    if (s == "csv") {
        return output_format::csv;
    }
    throw config_error("unknown format '" + s + "'");
}

inline void add_common(CLI::App *cmd, common_options &opts)
{
    cmd->add_option("-n,--vars", opts.nvars, "Number of variables")->check(CLI::Range(1, 64));
    cmd->add_option("--cap", opts.cap, "Enumeration cap (set elements per call)")->check(CLI::PositiveNumber);
    cmd->add_option("--workers", opts.workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
}

inline std::string opt_text(const std::optional<monomial> &m)
{
    return m ? format_monomial(*m) : "absent";
}

inline nlohmann::json opt_json(const std::optional<monomial> &m)
{
    return m ? nlohmann::json(format_monomial(*m)) : nlohmann::json(nullptr);
}

inline std::string verdict_summary(const verdict &v)
{
    const auto &u = v.subject;
    const auto t = u[u.nvars() - 1];
    if (v.is_gotzmann) {
        if (v.witness_gaps && v.witness_gaps->is_unit()) {
            return "Gotzmann (trivially; no gaps)";
        }
        if (v.threshold) {
            return "Gotzmann; t=" + std::to_string(t) + " meets threshold " + std::to_string(*v.threshold);
        }
        return "Gotzmann; gaps maxgen " + opt_text(v.witness_gaps) + " equals cogaps maxgen";
    }
    std::string s = "NOT Gotzmann; gaps maxgen " + opt_text(v.witness_gaps) + ", cogaps maxgen "
                    + opt_text(v.witness_cogaps);
    if (v.threshold) {
        s += "; threshold t≥" + std::to_string(*v.threshold);
    }
    return s;
}

inline void render_verdict(const verdict &v, output_format fmt, std::ostream &out)
{
    const auto name = format_monomial(v.subject);
    switch (fmt) {
    case output_format::plain: {
        out << verdict_summary(v) << '\n';
        out << "method: " << to_string(v.method) << '\n';
        out << "gaps maxgen: " << opt_text(v.witness_gaps) << '\n';
        out << "cogaps maxgen: " << opt_text(v.witness_cogaps) << '\n';
        if (v.threshold) {
            const auto t = static_cast<std::int64_t>(v.subject[v.subject.nvars() - 1]);
            const auto h = static_cast<std::int64_t>(*v.threshold);
            out << "threshold: t>=" << h << " (t=" << t << ", distance " << (t - h) << ")\n";
        }
        break;
    }
    case output_format::json: {
        nlohmann::json j{{"monomial", name},
                         {"gotzmann", v.is_gotzmann},
                         {"method", to_string(v.method)},
                         {"gaps_maxgen", opt_json(v.witness_gaps)},
                         {"cogaps_maxgen", opt_json(v.witness_cogaps)},
                         {"threshold", v.threshold ? nlohmann::json(*v.threshold) : nlohmann::json(nullptr)}};
        out << j.dump() << '\n';
        break;
    }
    case output_format::csv:
        out << "monomial,gotzmann,method,gaps_maxgen,cogaps_maxgen,threshold\n";
        out << name << ',' << (v.is_gotzmann ? "true" : "false") << ',' << to_string(v.method) << ','
            << (v.witness_gaps ? format_monomial(*v.witness_gaps) : "") << ','
            << (v.witness_cogaps ? format_monomial(*v.witness_cogaps) : "") << ','
            << (v.threshold ? std::to_string(*v.threshold) : "") << '\n';
        break;
    }
}

inline std::string set_text(const monomial_set &s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_monomial(s[i]);
    }
    return out + "}";
}

inline nlohmann::json set_json(const monomial_set &s)
{
    auto arr = nlohmann::json::array();
    for (const auto &m : s) {
        arr.push_back(format_monomial(m));
    }
    return arr;
}

inline void render_report(const monomial &u, const gap_report &r, output_format fmt, std::ostream &out)
{
    const auto formula = maxgen_gaps_formula(u);
    const bool equal = r.maxgen_gaps == r.maxgen_cogaps;
    switch (fmt) {
    case output_format::plain:
        out << "monomial=" << u << '\n';
        out << "g=" << r.gap_count << '\n';
        out << "u_tilde=" << r.u_tilde << '\n';
        out << "gaps=" << set_text(r.gaps) << '\n';
        out << "cogaps=" << set_text(r.cogaps) << '\n';
        out << "gaps_maxgen=" << r.maxgen_gaps << '\n';
        out << "cogaps_maxgen=" << r.maxgen_cogaps << '\n';
        out << "gaps_maxgen_formula=" << formula << '\n';
        out << (equal ? "maxgen equal: Gotzmann" : "maxgen mismatch: not Gotzmann") << '\n';
        break;
    case output_format::json: {
        nlohmann::json j{{"monomial", format_monomial(u)},
                         {"g", r.gap_count},
                         {"u_tilde", format_monomial(r.u_tilde)},
                         {"gaps", set_json(r.gaps)},
                         {"cogaps", set_json(r.cogaps)},
                         {"gaps_maxgen", format_monomial(r.maxgen_gaps)},
                         {"cogaps_maxgen", format_monomial(r.maxgen_cogaps)},
                         {"gaps_maxgen_formula", format_monomial(formula)},
                         {"gotzmann", equal}};
        out << j.dump() << '\n';
        break;
    }
    case output_format::csv:
        // Sets are space-separated inside a field; monomials contain no commas.
        out << "monomial,g,u_tilde,gaps,cogaps,gaps_maxgen,cogaps_maxgen,gaps_maxgen_formula,gotzmann\n";
        {
            auto spaced = [](const monomial_set &s) {
                std::string t;
                for (const auto &m : s) {
                    t += (t.empty() ? "" : " ") + format_monomial(m);
                }
                return t;
            };
            out << u << ',' << r.gap_count << ',' << r.u_tilde << ',' << spaced(r.gaps) << ',' << spaced(r.cogaps)
                << ',' << r.maxgen_gaps << ',' << r.maxgen_cogaps << ',' << formula << ','
                << (equal ? "true" : "false") << '\n';
        }
        break;
    }
}

inline void render_sweep(const sweep_result &res, output_format fmt, std::ostream &out)
{
    switch (fmt) {
    case output_format::plain:
        for (const auto &m : res.mismatches) {
            out << "MISMATCH " << m.criterion << ' ' << m.subject << ": expected " << m.expected << ", got "
                << m.actual << '\n';
        }
        for (const auto &s : res.skipped) {
            out << "SKIP " << s << '\n';
        }
        out << "checked " << res.cells_checked << " cells, " << res.mismatches.size() << " mismatches, "
            << res.skipped.size() << " skipped\n";
        break;
    case output_format::json: {
        auto mm = nlohmann::json::array();
        for (const auto &m : res.mismatches) {
            mm.push_back({{"monomial", m.subject},
                          {"expected", m.expected},
                          {"actual", m.actual},
                          {"criterion", m.criterion}});
        }
        nlohmann::json j{{"cells_checked", res.cells_checked}, {"mismatches", mm}, {"skipped", res.skipped}};
        out << j.dump() << '\n';
        break;
    }
    case output_format::csv:
        out << "monomial,expected,actual,criterion\n";
        for (const auto &m : res.mismatches) {
            out << m.subject << ',' << m.expected << ',' << m.actual << ',' << m.criterion << '\n';
        }
        break;
    }
}

// The plain table format is the CSV layout.
inline void render_table(const std::vector<table_row> &rows, std::size_t nvars, output_format fmt, std::ostream &out)
{
    auto opt_num = [](const std::optional<std::uint64_t> &v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    if (fmt == output_format::json) {
        auto arr = nlohmann::json::array();
        for (const auto &r : rows) {
            arr.push_back({{"b", opt_num(r.b)}, {"c", opt_num(r.c)}, {"threshold", opt_num(r.threshold)}});
        }
        out << arr.dump() << '\n';
        return;
    }
    auto num = [](const std::optional<std::uint64_t> &v) { return v ? std::to_string(*v) : std::string("none"); };
    if (nvars <= 2) {
        out << "threshold\n";
    } else if (nvars == 3) {
        out << "b,threshold\n";
    } else {
        out << "b,c,threshold\n";
    }
    for (const auto &r : rows) {
        if (nvars <= 2) {
            out << num(r.threshold) << '\n';
        } else if (nvars == 3) {
            out << num(r.b) << ',' << num(r.threshold) << '\n';
        } else {
            out << num(r.b) << ',' << num(r.c) << ',' << num(r.threshold) << '\n';
        }
    }
}

// Entry point shared by the gotz binary and the in-process tests.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Gotzmann monomial classification and verification"};
    app.require_subcommand(1);

    common_options opts;

    std::string text;
    std::string method = "oracle";
    auto *classify = app.add_subcommand("classify", "Decide whether a monomial is Gotzmann");
    add_common(classify, opts);
    classify->add_option("monomial", text, "Monomial, e.g. x2^2*x4 or 0,2,0,1")->required();
    classify->add_option("--method", method, "Decision procedure")
        ->check(CLI::IsMember({"oracle", "closed-form"}));

    auto *report = app.add_subcommand("report", "Print gaps, cogaps and their maxgen monomials");
    add_common(report, opts);
    report->add_option("monomial", text, "Monomial")->required();

    std::string mode = "verify-threshold";
    std::string a_text, b_text, c_text, t_text, deg_text;
    auto *verify = app.add_subcommand("verify", "Check closed forms against the oracles over a grid");
    add_common(verify, opts);
    verify->add_option("--mode", mode, "What to verify")
        ->check(CLI::IsMember({"verify-threshold", "verify-formulas"}));
    verify->add_option("--a", a_text, "Range of the x1 exponent, lo..hi");
    verify->add_option("--b", b_text, "Range of the x2 exponent, lo..hi");
    verify->add_option("--c", c_text, "Range of the x3 exponent, lo..hi");
    verify->add_option("--t", t_text, "Range of the last exponent (default 0..threshold+2)");
    verify->add_option("--deg", deg_text, "Degree range for verify-formulas");

    auto *table = app.add_subcommand("table", "Tabulate thresholds");
    add_common(table, opts);
    table->add_option("--b", b_text, "Range of the x2 exponent, lo..hi");
    table->add_option("--c", c_text, "Range of the x3 exponent, lo..hi");
    table->add_option("--t", t_text, "Search range of the last exponent for n >= 5");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        const auto fmt = parse_format(opts.format);
        if (classify->parsed()) {
            const auto u = parse_monomial(text, opts.nvars);
            verdict v = method == "closed-form" ? is_gotzmann_closed_form(u, opts.cap)
                                                : is_gotzmann_monomial_oracle(u, opts.cap);
            render_verdict(v, fmt, out);
            return v.is_gotzmann ? exit_ok : exit_negative;
        }
        if (report->parsed()) {
            const auto u = parse_monomial(text, opts.nvars);
            render_report(u, analyze_gaps(u, opts.cap), fmt, out);
            return exit_ok;
        }

        sweep_config cfg;
        cfg.nvars = opts.nvars;
        cfg.cap = opts.cap;
        cfg.workers = opts.workers;
        cfg.format = fmt;
        if (!a_text.empty()) {
            cfg.a = parse_range(a_text);
        }
        if (!b_text.empty()) {
            cfg.b = parse_range(b_text);
        }
        if (!c_text.empty()) {
            cfg.c = parse_range(c_text);
        }
        if (!t_text.empty()) {
            cfg.t = parse_range(t_text);
        }
        if (!deg_text.empty()) {
            cfg.deg = parse_range(deg_text);
        }

        if (verify->parsed()) {
            cfg.mode = mode == "verify-formulas" ? sweep_mode::verify_formulas : sweep_mode::verify_threshold;
            const auto tasks = cfg.mode == sweep_mode::verify_formulas ? formula_tasks(cfg) : threshold_tasks(cfg);
            err << "verify: " << mode << ", n=" << cfg.nvars << ", " << tasks.size() << " cells, " << cfg.workers
                << " workers\n";
            const auto res = run_cells(tasks, cfg.workers);
            render_sweep(res, fmt, out);
            err << "elapsed " << res.elapsed.count() << " s\n";
            return res.ok() ? exit_ok : exit_negative;
        }
        if (table->parsed()) {
            cfg.mode = sweep_mode::table;
            render_table(threshold_table(cfg), cfg.nvars, fmt, out);
            return exit_ok;
        }
    } catch (const enumeration_cap_exceeded &e) {
        err << "error: " << e.what() << '\n';
        err << "hint: raise --cap, or use 'classify --method closed-form' for n <= 4\n";
        return exit_error;
    } catch (const error &e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

} // namespace gotz::cli

#endif
