#ifndef GOTZ_LEX_HPP
#define GOTZ_LEX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gotz/arith.hpp>
#include <gotz/error.hpp>
#include <gotz/monomial.hpp>

namespace gotz
{

// Upper bound on the number of monomials any single call may materialize.
inline constexpr std::size_t default_enumeration_cap = 5'000'000;

namespace detail
{

inline void check_cap(std::uint64_t wanted, std::size_t cap, const char *what)
{
    if (wanted > cap) {
        throw enumeration_cap_exceeded(std::string(what) + " would materialize " + std::to_string(wanted)
                                       + " monomials, above the cap of " + std::to_string(cap));
    }
}

} // namespace detail

// A finite subset of S_{n,d}, kept sorted lex-descending without duplicates.
class monomial_set
{
public:
    using const_iterator = std::vector<monomial>::const_iterator;

    monomial_set(std::size_t nvars, std::uint64_t degree) : m_nvars(nvars), m_degree(degree)
    {
        if (nvars == 0) {
            throw range_error("a monomial set needs at least one variable");
        }
    }

    monomial_set(std::size_t nvars, std::uint64_t degree, std::vector<monomial> members)
        : monomial_set(nvars, degree)
    {
        for (const auto &m : members) {
            if (m.nvars() != nvars) {
                throw dimension_mismatch("member " + format_monomial(m) + " has " + std::to_string(m.nvars())
                                         + " variables, set has " + std::to_string(nvars));
            }
            if (m.degree() != degree) {
                throw degree_mismatch("member " + format_monomial(m) + " has degree " + std::to_string(m.degree())
                                      + ", set has degree " + std::to_string(degree));
            }
        }
        if (!std::is_sorted(members.begin(), members.end(), lex_greater{})) {
            std::sort(members.begin(), members.end(), lex_greater{});
        }
        members.erase(std::unique(members.begin(), members.end()), members.end());
        m_members = std::move(members);
    }

    std::size_t nvars() const noexcept
    {
        return m_nvars;
    }
    std::uint64_t degree() const noexcept
    {
        return m_degree;
    }
    std::size_t size() const noexcept
    {
        return m_members.size();
    }
    bool empty() const noexcept
    {
        return m_members.empty();
    }
    const_iterator begin() const noexcept
    {
        return m_members.begin();
    }
    const_iterator end() const noexcept
    {
        return m_members.end();
    }
    std::span<const monomial> members() const noexcept
    {
        return m_members;
    }
    const monomial &operator[](std::size_t i) const noexcept
    {
        return m_members[i];
    }

    bool contains(const monomial &u) const
    {
        if (u.nvars() != m_nvars || u.degree() != m_degree) {
            return false;
        }
        return std::binary_search(m_members.begin(), m_members.end(), u, lex_greater{});
    }

    friend bool operator==(const monomial_set &, const monomial_set &) = default;

private:
    std::size_t m_nvars;
    std::uint64_t m_degree;
    std::vector<monomial> m_members;
};

namespace detail
{

inline void require_compatible(const monomial_set &a, const monomial_set &b)
{
    if (a.nvars() != b.nvars()) {
        throw dimension_mismatch("monomial sets live in different rings");
    }
    if (a.degree() != b.degree()) {
        throw degree_mismatch("monomial sets have different degrees");
    }
}

} // namespace detail

inline monomial_set set_difference(const monomial_set &a, const monomial_set &b)
{
    detail::require_compatible(a, b);
    std::vector<monomial> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), lex_greater{});
    return monomial_set(a.nvars(), a.degree(), std::move(out));
}

inline monomial_set set_union(const monomial_set &a, const monomial_set &b)
{
    detail::require_compatible(a, b);
    std::vector<monomial> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), lex_greater{});
    return monomial_set(a.nvars(), a.degree(), std::move(out));
}

inline bool is_subset(const monomial_set &a, const monomial_set &b)
{
    detail::require_compatible(a, b);
    return std::includes(b.begin(), b.end(), a.begin(), a.end(), lex_greater{});
}

// v * B, elementwise. Multiplication preserves the lex order.
inline monomial_set times(const monomial &v, const monomial_set &b)
{
    if (v.nvars() != b.nvars()) {
        throw dimension_mismatch("multiplier and set live in different rings");
    }
    std::vector<monomial> out;
    out.reserve(b.size());
    for (const auto &w : b) {
        out.push_back(mul(v, w));
    }
    return monomial_set(b.nvars(), checked_add(b.degree(), v.degree()), std::move(out));
}

// |S_{n,d}| = C(n+d-1, d).
inline std::uint64_t count(std::size_t nvars, std::uint64_t degree)
{
    if (nvars == 0) {
        throw range_error("count needs at least one variable");
    }
    return binomial(checked_add(static_cast<std::uint64_t>(nvars) - 1, degree), degree);
}

inline monomial successor(const monomial &u)
{
    const auto n = u.nvars();
    if (u[n - 1] == u.degree()) {
        throw no_successor(format_monomial(u) + " is the smallest monomial of its degree");
    }
    // u = v * x_n^{a_n} with m = max(v) < n.
    const auto a_n = u[n - 1];
    std::size_t m = n - 1;
    while (u[m - 1] == 0) {
        --m;
    }
    std::vector<std::uint64_t> exps(u.exponents().begin(), u.exponents().end());
    exps[n - 1] = 0;
    exps[m - 1] -= 1;
    exps[m] += a_n + 1;
    return monomial(std::move(exps));
}

inline monomial predecessor(const monomial &u)
{
    if (u[0] == u.degree()) {
        throw no_predecessor(format_monomial(u) + " is the largest monomial of its degree");
    }
    // u = v * x_m^a with m = max(u); the predecessor is v * x_{m-1} * x_n^{a-1}.
    const auto n = u.nvars();
    const auto m = max_index(u).value();
    const auto a = u[m - 1];
    std::vector<std::uint64_t> exps(u.exponents().begin(), u.exponents().end());
    exps[m - 1] = 0;
    exps[m - 2] += 1;
    exps[n - 1] += a - 1;
    return monomial(std::move(exps));
}

// Position in S_{n,d} sorted lex-descending; rank(x_1^d) = 0.
//
// The monomials above u are counted coordinate by coordinate: those agreeing
// with u before position i and carrying a larger exponent at i. With rem the
// degree left at position i, they number sum_{e > a_i} |S_{n-i, rem-e}|,
// which telescopes to |S_{n-i+1, rem-a_i-1}|.
inline std::uint64_t rank(const monomial &u)
{
    const auto n = u.nvars();
    std::uint64_t rem = u.degree();
    std::uint64_t r = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (rem > u[i]) {
            r = checked_add(r, count(n - i, rem - u[i] - 1));
        }
        rem -= u[i];
    }
    return r;
}

inline monomial unrank(std::size_t nvars, std::uint64_t degree, std::uint64_t r)
{
    const auto total = count(nvars, degree);
    if (r >= total) {
        throw range_error("rank " + std::to_string(r) + " outside 0.." + std::to_string(total - 1) + " for S_{"
                          + std::to_string(nvars) + "," + std::to_string(degree) + "}");
    }
    std::vector<std::uint64_t> exps(nvars, 0);
    std::uint64_t rem = degree;
    for (std::size_t i = 0; i + 1 < nvars; ++i) {
        // Larger exponents come first in descending lex order.
        std::uint64_t e = rem;
        while (true) {
            const auto block = count(nvars - i - 1, rem - e);
            if (r < block) {
                break;
            }
            r -= block;
            --e;
        }
        exps[i] = e;
        rem -= e;
    }
    exps[nvars - 1] = rem;
    return monomial(std::move(exps));
}

// L(u) = {v in S_{n,d} : v >= u}.
inline monomial_set lexsegment(const monomial &u, std::size_t cap = default_enumeration_cap)
{
    const auto size = checked_add(rank(u), 1);
    detail::check_cap(size, cap, "lexsegment");
    std::vector<monomial> out;
    out.reserve(size);
    out.push_back(monomial::variable(u.nvars(), var_index(1), u.degree()));
    while (out.size() < size) {
        out.push_back(successor(out.back()));
    }
    return monomial_set(u.nvars(), u.degree(), std::move(out));
}

// L*(upper, lower) = {v : upper > v >= lower}.
inline monomial_set lexinterval_exclusive(const monomial &upper, const monomial &lower,
                                          std::size_t cap = default_enumeration_cap)
{
    if (lex_compare(upper, lower) < 0) {
        throw order_violation("lexinterval needs upper >= lower, got " + format_monomial(upper) + " < "
                              + format_monomial(lower));
    }
    const auto size = rank(lower) - rank(upper);
    detail::check_cap(size, cap, "lexinterval");
    std::vector<monomial> out;
    out.reserve(size);
    if (size > 0) {
        out.push_back(successor(upper));
        while (out.size() < size) {
            out.push_back(successor(out.back()));
        }
    }
    return monomial_set(upper.nvars(), upper.degree(), std::move(out));
}

// All of S_{n,d}.
inline monomial_set enumerate_degree(std::size_t nvars, std::uint64_t degree,
                                     std::size_t cap = default_enumeration_cap)
{
    return lexsegment(monomial::variable(nvars, var_index(nvars), degree), cap);
}

// pred_r(u) = {pred^i(u) : 0 <= i < r} together with pred^r(u). The endpoint
// is absent when r = |L(u)|, since x_1^d has no predecessor.
struct pred_chain {
    monomial_set members;
    std::optional<monomial> next;
};

inline pred_chain pred_iter(const monomial &u, std::uint64_t r, std::size_t cap = default_enumeration_cap)
{
    const auto seg_size = checked_add(rank(u), 1);
    if (r > seg_size) {
        throw range_error("cannot take " + std::to_string(r) + " predecessors of " + format_monomial(u) + ", |L(u)| = "
                          + std::to_string(seg_size));
    }
    detail::check_cap(r, cap, "pred_iter");
    std::vector<monomial> out;
    out.reserve(r);
    monomial cur = u;
    for (std::uint64_t i = 0; i < r; ++i) {
        out.push_back(cur);
        if (i + 1 < seg_size) {
            cur = predecessor(cur);
        }
    }
    std::optional<monomial> next;
    if (r < seg_size) {
        next = std::move(cur);
    }
    // Built from the bottom up, so reverse into descending order.
    std::reverse(out.begin(), out.end());
    return pred_chain{monomial_set(u.nvars(), u.degree(), std::move(out)), std::move(next)};
}

// pred^r(u), without materializing the chain.
inline monomial pred_power(const monomial &u, std::uint64_t r)
{
    const auto seg_size = checked_add(rank(u), 1);
    if (r >= seg_size) {
        throw range_error("pred^" + std::to_string(r) + " of " + format_monomial(u) + " is undefined");
    }
    monomial cur = u;
    for (std::uint64_t i = 0; i < r; ++i) {
        cur = predecessor(cur);
    }
    return cur;
}

} // namespace gotz

#endif
