#ifndef GOTZ_GAPS_HPP
#define GOTZ_GAPS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gotz/arith.hpp>
#include <gotz/borel.hpp>
#include <gotz/error.hpp>
#include <gotz/lex.hpp>
#include <gotz/monomial.hpp>

namespace gotz
{

// gaps(u) = L(u) \ B(u), by materializing both sides.
inline monomial_set gaps_enumerated(const monomial &u, std::size_t cap = default_enumeration_cap)
{
    return set_difference(lexsegment(u, cap), borel_closure(u, cap));
}

// The two-index characterization of a gap: writing u = x_{i_1}...x_{i_d} and
// v = x_{j_1}...x_{j_d}, there are s < t with j agreeing with i before s,
// j_s < i_s and j_t > i_t.
inline bool satisfies_gap_criterion(const monomial &u, const monomial &v)
{
    detail::require_same_nvars(u, v);
    if (u.degree() != v.degree()) {
        return false;
    }
    const auto iu = sorted_factors(u);
    const auto jv = sorted_factors(v);
    std::size_t s = 0;
    while (s < iu.size() && iu[s] == jv[s]) {
        ++s;
    }
    if (s == iu.size() || jv[s] > iu[s]) {
        return false;
    }
    for (std::size_t t = s + 1; t < iu.size(); ++t) {
        if (jv[t] > iu[t]) {
            return true;
        }
    }
    return false;
}

namespace detail
{

// All degree-d monomials in the variables x_first..x_n.
inline std::vector<monomial> tail_monomials(std::size_t nvars, std::size_t first, std::uint64_t degree,
                                            std::size_t cap)
{
    std::vector<monomial> out;
    if (first > nvars) {
        if (degree == 0) {
            out.push_back(monomial::unit(nvars));
        }
        return out;
    }
    const auto width = nvars - first + 1;
    for (const auto &w : enumerate_degree(width, degree, cap)) {
        std::vector<std::uint64_t> exps(nvars, 0);
        std::copy(w.exponents().begin(), w.exponents().end(), exps.begin() + static_cast<std::ptrdiff_t>(first - 1));
        out.emplace_back(std::move(exps));
    }
    return out;
}

// Walks the prefixes u_k = x_{i_1}...x_{i_k} for 1 <= k <= d-1 with
// i_{k+1} < n, the only ones that can contribute gaps. Calls
// visit(k, u_k, i_{k+1}).
template <typename Visitor>
void for_each_gap_prefix(const monomial &u, Visitor &&visit)
{
    const auto n = u.nvars();
    const auto d = u.degree();
    if (d < 2) {
        return;
    }
    const auto factors = sorted_factors(u);
    std::vector<std::uint64_t> pre(n, 0);
    pre[factors[0] - 1] = 1;
    for (std::uint64_t k = 1; k + 1 <= d && factors[k] < n; ++k) {
        visit(k, monomial(pre), factors[k]);
        pre[factors[k] - 1] += 1;
    }
}

} // namespace detail

// gaps(u) as the disjoint union over k of A_1(u_k) * A_2(u / u_k), where
// A_1(v) = B(v) \ {v} and A_2(v) collects the monomials of degree deg(v)
// whose min index exceeds min(v). Degrees 0 and 1 give the empty union.
inline monomial_set gaps_structural(const monomial &u, std::size_t cap = default_enumeration_cap)
{
    std::vector<monomial> out;
    detail::for_each_gap_prefix(u, [&](std::uint64_t k, const monomial &uk, std::size_t next) {
        const auto a2 = detail::tail_monomials(u.nvars(), next + 1, u.degree() - k, cap);
        const auto closure = borel_closure(uk, cap);
        detail::check_cap(out.size() + (closure.size() - 1) * a2.size(), cap, "gaps_structural");
        for (const auto &w1 : closure) {
            if (w1 == uk) {
                continue;
            }
            for (const auto &w2 : a2) {
                out.push_back(mul(w1, w2));
            }
        }
    });
    const auto produced = out.size();
    monomial_set result(u.nvars(), u.degree(), std::move(out));
    if (result.size() != produced) {
        throw internal_inconsistency("structural gap pieces of " + format_monomial(u) + " overlap");
    }
    return result;
}

// |gaps(u)| = sum_k (|B(u_k)| - 1) * |S_{n - i_{k+1}, d - k}|, never materializing a set.
inline std::uint64_t gap_count(const monomial &u)
{
    borel_size_cache borel;
    std::uint64_t total = 0;
    detail::for_each_gap_prefix(u, [&](std::uint64_t k, const monomial &uk, std::size_t next) {
        const auto a1 = borel(uk) - 1;
        const auto a2 = count(u.nvars() - next, u.degree() - k);
        total = checked_add(total, checked_mul(a1, a2));
    });
    return total;
}

// maxgen(gaps(u)) in closed form:
//   prod_k ( prod_{j > i_{k+1}} x_j^{C(d-k-2+j-i_{k+1}, d-k-1)} )^{|B(u_k)| - 1}.
inline maxgen_monomial maxgen_gaps_formula(const monomial &u)
{
    borel_size_cache borel;
    std::vector<std::uint64_t> exps(u.nvars(), 0);
    detail::for_each_gap_prefix(u, [&](std::uint64_t k, const monomial &uk, std::size_t next) {
        const auto mult = borel(uk) - 1;
        const auto tail_deg = u.degree() - k;
        for (std::size_t j = next + 1; j <= u.nvars(); ++j) {
            const auto c = binomial(checked_add(tail_deg - 1, j - next - 1), tail_deg - 1);
            exps[j - 1] = checked_add(exps[j - 1], checked_mul(c, mult));
        }
    });
    return maxgen_monomial(std::move(exps));
}

// Given w = maxgen(gaps(u)) = prod x_i^{k_i}, maxgen(gaps(u x_n)) = prod x_j^{k_1+...+k_j}.
inline maxgen_monomial maxgen_gaps_xn_shift(const maxgen_monomial &w)
{
    std::vector<std::uint64_t> exps(w.nvars());
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < w.nvars(); ++j) {
        acc = checked_add(acc, w[j]);
        exps[j] = acc;
    }
    return maxgen_monomial(std::move(exps));
}

// maxgen(pred_r(u)) and pred^r(u), walking predecessors without storing them.
struct predecessor_walk_result {
    maxgen_monomial maxgen;
    std::optional<monomial> endpoint;
};

inline predecessor_walk_result predecessor_walk(const monomial &u, std::uint64_t r)
{
    const auto seg_size = checked_add(rank(u), 1);
    if (r > seg_size) {
        throw range_error("cannot take " + std::to_string(r) + " predecessors of " + format_monomial(u));
    }
    std::vector<std::uint64_t> m(u.nvars(), 0);
    monomial cur = u;
    for (std::uint64_t i = 0; i < r; ++i) {
        if (!cur.is_unit()) {
            m[lambda_var(cur).value() - 1] += 1;
        }
        if (i + 1 < seg_size) {
            cur = predecessor(cur);
        }
    }
    std::optional<monomial> endpoint;
    if (r < seg_size) {
        endpoint = std::move(cur);
    }
    return predecessor_walk_result{maxgen_monomial(std::move(m)), std::move(endpoint)};
}

// mu(lower, upper) = maxgen(L*(upper, lower)) = prod_{upper > v >= lower} lambda(v).
inline maxgen_monomial mu_enumerated(const monomial &lower, const monomial &upper,
                                     std::size_t cap = default_enumeration_cap)
{
    if (lex_compare(upper, lower) < 0) {
        throw order_violation("mu needs upper >= lower, got " + format_monomial(upper) + " < "
                              + format_monomial(lower));
    }
    const auto steps = rank(lower) - rank(upper);
    detail::check_cap(steps, cap, "mu_enumerated");
    return predecessor_walk(lower, steps).maxgen;
}

// mu(v x_m^k, v x_{m-1}^k) = x_m^k prod_{i=1}^{n-m} x_{m+i}^{C(k-1+i, i+1)} for max(v) <= m-1.
inline maxgen_monomial mu_power_drop(const monomial &v, var_index m, std::uint64_t k, std::size_t nvars)
{
    if (v.nvars() != nvars) {
        throw dimension_mismatch("v has " + std::to_string(v.nvars()) + " variables, expected "
                                 + std::to_string(nvars));
    }
    if (m.value() < 2 || m.value() > nvars || k < 1) {
        throw precondition_violation("mu_power_drop needs 2 <= m <= n and k >= 1");
    }
    if (!v.is_unit() && max_index(v) >= m) {
        throw precondition_violation("mu_power_drop needs max(v) <= m-1, got v = " + format_monomial(v));
    }
    std::vector<std::uint64_t> exps(nvars, 0);
    exps[m.value() - 1] = k;
    for (std::size_t i = 1; m.value() + i <= nvars; ++i) {
        exps[m.value() + i - 1] = binomial(checked_add(k - 1, i), i + 1);
    }
    return maxgen_monomial(std::move(exps));
}

// In four variables: mu(x_2^r x_4^s, x_2^{r+i} x_4^{s-i}) = x_3^i x_4^{C(i+1,2) + i(s-i)}, 1 <= i <= s.
inline maxgen_monomial mu_two_var(std::uint64_t r, std::uint64_t s, std::uint64_t i, std::size_t nvars = 4)
{
    static_cast<void>(r);
    if (nvars != 4) {
        throw precondition_violation("mu_two_var is a four-variable identity");
    }
    if (i < 1 || i > s) {
        throw precondition_violation("mu_two_var needs 1 <= i <= s");
    }
    const auto e4 = checked_add(binomial(i + 1, 2), checked_mul(i, s - i));
    return maxgen_monomial({0, 0, i, e4});
}

// Everything known about the gaps and cogaps of u.
struct gap_report {
    monomial_set gaps;
    monomial_set cogaps;
    monomial u_tilde;
    std::uint64_t gap_count;
    maxgen_monomial maxgen_gaps;
    maxgen_monomial maxgen_cogaps;
};

// cogaps(u) = pred_g(u) and u~ = pred^g(u), with g taken from the closed-form
// count; the enumerated gap set must agree with it.
inline gap_report analyze_gaps(const monomial &u, std::size_t cap = default_enumeration_cap)
{
    const auto g = gap_count(u);
    auto chain = pred_iter(u, g, cap);
    if (!chain.next) {
        throw internal_inconsistency("gap count of " + format_monomial(u) + " exhausts L(u)");
    }
    auto gaps = gaps_enumerated(u, cap);
    if (gaps.size() != g) {
        throw internal_inconsistency("gap count " + std::to_string(g) + " of " + format_monomial(u)
                                     + " disagrees with " + std::to_string(gaps.size()) + " enumerated gaps");
    }
    auto mg = maxgen(gaps);
    auto mc = maxgen(chain.members);
    return gap_report{std::move(gaps), std::move(chain.members), std::move(*chain.next), g, std::move(mg),
                      std::move(mc)};
}

} // namespace gotz

#endif
