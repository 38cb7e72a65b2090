#ifndef GOTZ_SWEEP_HPP
#define GOTZ_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <gotz/borel.hpp>
#include <gotz/error.hpp>
#include <gotz/gaps.hpp>
#include <gotz/gotzmann.hpp>
#include <gotz/lex.hpp>
#include <gotz/monomial.hpp>

namespace gotz
{

class config_error : public error
{
public:
    using error::error;
};

// Inclusive integer range lo..hi.
struct int_range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool contains(std::uint64_t x) const noexcept
    {
        return lo <= x && x <= hi;
    }
};

// Parses "lo..hi" or a single integer.
inline int_range parse_range(const std::string &text)
{
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const auto v = std::stoull(text, &used);
            if (used != text.size()) {
                throw config_error("trailing characters in range '" + text + "'");
            }
            return {v, v};
        }
        const auto lo_text = text.substr(0, dots);
        const auto hi_text = text.substr(dots + 2);
        const auto lo = std::stoull(lo_text, &used);
        if (used != lo_text.size()) {
            throw config_error("bad lower bound in range '" + text + "'");
        }
        const auto hi = std::stoull(hi_text, &used);
        if (used != hi_text.size()) {
            throw config_error("bad upper bound in range '" + text + "'");
        }
        if (lo > hi) {
            throw config_error("empty range '" + text + "'");
        }
        return {lo, hi};
    } catch (const std::logic_error &) {
        throw config_error("cannot parse range '" + text + "', expected lo..hi");
    }
}

enum class sweep_mode { verify_threshold, verify_formulas, table };

enum class output_format { plain, json, csv };

struct sweep_config {
    std::size_t nvars = 4;
    int_range a{0, 1};
    int_range b{0, 3};
    int_range c{0, 3};
    // Unset: 0 .. threshold + 2 per cell.
    std::optional<int_range> t;
    int_range deg{0, 5};
    sweep_mode mode = sweep_mode::verify_threshold;
    std::size_t cap = default_enumeration_cap;
    std::size_t workers = 1;
    output_format format = output_format::plain;
};

struct mismatch {
    std::string subject;
    std::string expected;
    std::string actual;
    std::string criterion;

    friend bool operator==(const mismatch &, const mismatch &) = default;
};

struct sweep_result {
    std::uint64_t cells_checked = 0;
    std::vector<mismatch> mismatches;
    // Cells abandoned because of the enumeration cap.
    std::vector<std::string> skipped;
    std::chrono::duration<double> elapsed{0};

    bool ok() const noexcept
    {
        return mismatches.empty();
    }
};

struct cell_outcome {
    std::vector<mismatch> mismatches;
    std::optional<std::string> skipped;
};

using cell_task = std::function<cell_outcome()>;

// Runs every task on a pool of `workers` threads. Outcomes are merged in task
// order, so the result does not depend on scheduling.
inline sweep_result run_cells(const std::vector<cell_task> &tasks, std::size_t workers)
{
    if (workers < 1) {
        throw config_error("need at least one worker");
    }
    const auto start = std::chrono::steady_clock::now();
    std::vector<cell_outcome> outcomes(tasks.size());
    std::vector<std::exception_ptr> failures(tasks.size());
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (auto i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            try {
                outcomes[i] = tasks[i]();
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < std::min(workers, tasks.size()); ++w) {
            pool.emplace_back(drain);
        }
        drain();
    }
    for (const auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    sweep_result res;
    for (auto &o : outcomes) {
        ++res.cells_checked;
        if (o.skipped) {
            res.skipped.push_back(std::move(*o.skipped));
        }
        for (auto &m : o.mismatches) {
            res.mismatches.push_back(std::move(m));
        }
    }
    res.elapsed = std::chrono::steady_clock::now() - start;
    return res;
}

namespace detail
{

inline std::string yes_no(bool b)
{
    return b ? "gotzmann" : "not-gotzmann";
}

// Compares the oracle with the closed form on one monomial.
inline cell_task threshold_cell(monomial u, std::size_t cap)
{
    return [u = std::move(u), cap]() -> cell_outcome {
        cell_outcome out;
        try {
            const auto expected = is_gotzmann_closed_form(u, 0).is_gotzmann;
            const auto actual = is_gotzmann_monomial_oracle(u, cap).is_gotzmann;
            if (expected != actual) {
                out.mismatches.push_back({format_monomial(u), yes_no(expected), yes_no(actual), "threshold"});
            }
        } catch (const enumeration_cap_exceeded &e) {
            out.skipped = format_monomial(u) + ": " + e.what();
        }
        return out;
    };
}

inline std::vector<std::uint64_t> range_values(const int_range &r)
{
    std::vector<std::uint64_t> v;
    for (auto x = r.lo;; ++x) {
        v.push_back(x);
        if (x == r.hi) {
            break;
        }
    }
    return v;
}

} // namespace detail

// Cells in lex order of (a, b, c, t), each comparing the oracle verdict with
// the closed-form threshold.
inline std::vector<cell_task> threshold_tasks(const sweep_config &cfg)
{
    const auto n = cfg.nvars;
    if (n < 2 || n > 4) {
        throw config_error("verify-threshold needs 2 <= n <= 4, got " + std::to_string(n));
    }
    std::vector<cell_task> tasks;
    const auto as = detail::range_values(cfg.a);
    // In two variables only x_1^a x_2^t remains; b plays no role.
    const auto bs = n == 2 ? std::vector<std::uint64_t>{0} : detail::range_values(cfg.b);
    const auto cs = n == 4 ? detail::range_values(cfg.c) : std::vector<std::uint64_t>{0};
    for (auto a : as) {
        for (auto b : bs) {
            for (auto c : cs) {
                std::uint64_t threshold = 0;
                if (n == 3) {
                    threshold = threshold_n3(b);
                } else if (n == 4) {
                    threshold = threshold_n4(b, c).threshold;
                }
                const auto t_range = cfg.t.value_or(int_range{0, threshold + 2});
                for (auto t : detail::range_values(t_range)) {
                    std::vector<std::uint64_t> exps(n, 0);
                    exps[0] = a;
                    if (n >= 3) {
                        exps[1] = b;
                    }
                    if (n == 4) {
                        exps[2] = c;
                    }
                    exps[n - 1] = t;
                    tasks.push_back(detail::threshold_cell(monomial(std::move(exps)), cfg.cap));
                }
            }
        }
    }
    return tasks;
}

inline sweep_result verify_threshold(const sweep_config &cfg)
{
    return run_cells(threshold_tasks(cfg), cfg.workers);
}

// Closed forms against enumeration, over every monomial of S_{n,d} for d in
// the degree range, plus the mu power-drop identity for k in the same range
// and, in four variables, the two-variable mu identity.
inline std::vector<cell_task> formula_tasks(const sweep_config &cfg)
{
    const auto n = cfg.nvars;
    const auto cap = cfg.cap;
    if (n < 1) {
        throw config_error("need at least one variable");
    }
    std::vector<cell_task> tasks;
    for (auto d : detail::range_values(cfg.deg)) {
        std::uint64_t size = 0;
        try {
            size = count(n, d);
            detail::check_cap(size, cap, "verify-formulas");
        } catch (const error &e) {
            tasks.push_back([msg = "S(n=" + std::to_string(n) + " d=" + std::to_string(d) + "): " + e.what()] {
                return cell_outcome{{}, msg};
            });
            continue;
        }
        for (std::uint64_t r = 0; r < size; ++r) {
            tasks.push_back([n, d, r, cap]() -> cell_outcome {
                cell_outcome out;
                const auto u = unrank(n, d, r);
                const auto name = format_monomial(u);
                auto check = [&](bool ok, std::string expected, std::string actual, const char *criterion) {
                    if (!ok) {
                        out.mismatches.push_back({name, std::move(expected), std::move(actual), criterion});
                    }
                };
                try {
                    const auto gaps = gaps_enumerated(u, cap);
                    const auto structural = gaps_structural(u, cap);
                    check(structural == gaps, std::to_string(gaps.size()) + " gaps",
                          std::to_string(structural.size()) + " structural gaps", "gaps_structural");
                    const auto g = gap_count(u);
                    check(g == gaps.size(), std::to_string(gaps.size()), std::to_string(g), "gap_count");
                    const auto mg = maxgen(gaps);
                    const auto mf = maxgen_gaps_formula(u);
                    check(mf == mg, format_monomial(mg), format_monomial(mf), "maxgen_gaps_formula");
                    const auto bs = borel_size(u);
                    const auto bc = borel_closure(u, cap).size();
                    check(bs == bc, std::to_string(bc), std::to_string(bs), "borel_size");
                } catch (const enumeration_cap_exceeded &e) {
                    out.skipped = name + ": " + e.what();
                }
                return out;
            });
        }
        if (d >= 1) {
            tasks.push_back([n, d, cap]() -> cell_outcome {
                cell_outcome out;
                const auto name = "S(n=" + std::to_string(n) + " d=" + std::to_string(d) + ")";
                try {
                    const auto all = enumerate_degree(n, d, cap);
                    const auto enumerated = maxgen(all);
                    const auto closed = maxgen_Snd(n, d);
                    if (closed != enumerated) {
                        out.mismatches.push_back(
                            {name, format_monomial(enumerated), format_monomial(closed), "maxgen_Snd"});
                    }
                    for (std::size_t l = 1; l <= n; ++l) {
                        std::vector<monomial> tail;
                        for (const auto &w : all) {
                            if (min_index(w).value() >= l) {
                                tail.push_back(w);
                            }
                        }
                        const auto tail_maxgen = maxgen(monomial_set(n, d, std::move(tail)));
                        const auto tail_closed = maxgen_Slnd(l, n, d);
                        if (tail_closed != tail_maxgen) {
                            out.mismatches.push_back({name + " from x" + std::to_string(l),
                                                      format_monomial(tail_maxgen), format_monomial(tail_closed),
                                                      "maxgen_Slnd"});
                        }
                    }
                } catch (const enumeration_cap_exceeded &e) {
                    out.skipped = name + ": " + e.what();
                }
                return out;
            });
        }
    }
    // mu power drop: v in {1, x_1, x_{m-1}^2}.
    for (std::size_t m = 2; m <= n; ++m) {
        for (auto k : detail::range_values(cfg.deg)) {
            if (k < 1) {
                continue;
            }
            tasks.push_back([n, m, k, cap]() -> cell_outcome {
                cell_outcome out;
                const std::vector<monomial> vs{monomial::unit(n), monomial::variable(n, var_index(1)),
                                               monomial::variable(n, var_index(m - 1), 2)};
                for (const auto &v : vs) {
                    const auto lower = mul_var(v, var_index(m), k);
                    const auto upper = mul_var(v, var_index(m - 1), k);
                    const auto name = "mu(" + format_monomial(lower) + " -> " + format_monomial(upper) + ")";
                    try {
                        const auto enumerated = mu_enumerated(lower, upper, cap);
                        const auto closed = mu_power_drop(v, var_index(m), k, n);
                        if (closed != enumerated) {
                            out.mismatches.push_back(
                                {name, format_monomial(enumerated), format_monomial(closed), "mu_power_drop"});
                        }
                    } catch (const enumeration_cap_exceeded &e) {
                        out.skipped = name + ": " + e.what();
                    }
                }
                return out;
            });
        }
    }
    if (n == 4) {
        const auto s_max = cfg.deg.hi;
        for (std::uint64_t r = 0; r <= 3; ++r) {
            for (std::uint64_t s = 1; s <= s_max; ++s) {
                tasks.push_back([r, s, cap]() -> cell_outcome {
                    cell_outcome out;
                    for (std::uint64_t i = 1; i <= s; ++i) {
                        const monomial lower{0, r, 0, s};
                        const monomial upper{0, r + i, 0, s - i};
                        const auto name = "mu(" + format_monomial(lower) + " -> " + format_monomial(upper) + ")";
                        const auto enumerated = mu_enumerated(lower, upper, cap);
                        const auto closed = mu_two_var(r, s, i);
                        if (closed != enumerated) {
                            out.mismatches.push_back(
                                {name, format_monomial(enumerated), format_monomial(closed), "mu_two_var"});
                        }
                    }
                    return out;
                });
            }
        }
    }
    return tasks;
}

inline sweep_result verify_formulas(const sweep_config &cfg)
{
    return run_cells(formula_tasks(cfg), cfg.workers);
}

struct table_row {
    std::optional<std::uint64_t> b;
    std::optional<std::uint64_t> c;
    std::optional<std::uint64_t> threshold;
};

// Threshold rows in lex order of (b, c). Closed form for n <= 4; for larger
// n, the oracle's minimal padding of x_2^b x_3^c with t searched in cfg.t.
inline std::vector<table_row> threshold_table(const sweep_config &cfg)
{
    const auto n = cfg.nvars;
    std::vector<table_row> rows;
    if (n < 1) {
        throw config_error("need at least one variable");
    }
    if (n <= 2) {
        rows.push_back({std::nullopt, std::nullopt, 0});
        return rows;
    }
    if (n == 3) {
        for (auto b : detail::range_values(cfg.b)) {
            rows.push_back({b, std::nullopt, threshold_n3(b)});
        }
        return rows;
    }
    const auto bs = detail::range_values(cfg.b);
    const auto cs = detail::range_values(cfg.c);
    if (n == 4) {
        for (auto b : bs) {
            for (auto c : cs) {
                rows.push_back({b, c, threshold_n4(b, c).threshold});
            }
        }
        return rows;
    }
    const auto t_max = cfg.t.value_or(int_range{0, 64}).hi;
    std::vector<cell_task> tasks;
    std::vector<table_row> found(bs.size() * cs.size());
    std::size_t idx = 0;
    for (auto b : bs) {
        for (auto c : cs) {
            tasks.push_back([&found, idx, b, c, n, t_max, cap = cfg.cap]() -> cell_outcome {
                std::vector<std::uint64_t> exps(n, 0);
                exps[1] = b;
                exps[2] = c;
                found[idx] = {b, c, std::nullopt};
                try {
                    found[idx].threshold = minimal_padding(monomial(std::move(exps)), t_max, padding_method::oracle, cap);
                } catch (const not_found_within_cap &) {
                } catch (const enumeration_cap_exceeded &) {
                }
                return {};
            });
            ++idx;
        }
    }
    run_cells(tasks, cfg.workers);
    return found;
}

} // namespace gotz

#endif
