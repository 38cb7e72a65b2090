#ifndef GOTZ_BOREL_HPP
#define GOTZ_BOREL_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gotz/arith.hpp>
#include <gotz/error.hpp>
#include <gotz/lex.hpp>
#include <gotz/monomial.hpp>

namespace gotz
{

// Exponent of x_i counts the members of a set whose max index is i.
using maxgen_monomial = monomial;

// B(u): the closure of {u} under v -> x_i v / x_j, i <= j, x_j | v.
//
// Only adjacent moves x_{j-1} v / x_j are applied: every general move is a
// chain of adjacent ones, each landing inside the closure.
inline monomial_set borel_closure(const monomial &u, std::size_t cap = default_enumeration_cap)
{
    std::set<monomial, lex_greater> seen{u};
    std::vector<monomial> work{u};
    while (!work.empty()) {
        const monomial v = std::move(work.back());
        work.pop_back();
        for (std::size_t j = 1; j < v.nvars(); ++j) {
            if (v[j] == 0) {
                continue;
            }
            std::vector<std::uint64_t> exps(v.exponents().begin(), v.exponents().end());
            exps[j] -= 1;
            exps[j - 1] += 1;
            monomial w(std::move(exps));
            if (seen.insert(w).second) {
                detail::check_cap(seen.size(), cap, "borel_closure");
                work.push_back(std::move(w));
            }
        }
    }
    return monomial_set(u.nvars(), u.degree(), std::vector<monomial>(seen.begin(), seen.end()));
}

// |B(w)| by recursion on the last variable: with w = v x_m^r and max(v) < m,
// |B(w)| = sum_{i=0}^{r} |B(v x_{m-1}^{r-i})|. Results are memoized, so a
// cache can be reused across many queries.
class borel_size_cache
{
public:
    std::uint64_t operator()(const monomial &w)
    {
        if (w.is_unit() || max_index(w).value() == 1) {
            return 1;
        }
        if (auto it = m_memo.find(w); it != m_memo.end()) {
            return it->second;
        }
        const auto m = max_index(w).value();
        const auto r = w[m - 1];
        std::vector<std::uint64_t> base(w.exponents().begin(), w.exponents().end());
        base[m - 1] = 0;
        std::uint64_t total = 0;
        for (std::uint64_t i = 0; i <= r; ++i) {
            auto exps = base;
            exps[m - 2] += r - i;
            total = checked_add(total, (*this)(monomial(std::move(exps))));
        }
        m_memo.emplace(w, total);
        return total;
    }

private:
    std::unordered_map<monomial, std::uint64_t> m_memo;
};

inline std::uint64_t borel_size(const monomial &w)
{
    borel_size_cache cache;
    return cache(w);
}

// Closed under every exchange move. As in borel_closure, checking adjacent
// moves suffices.
inline bool is_borel_stable(const monomial_set &b)
{
    for (const auto &v : b) {
        for (std::size_t j = 1; j < v.nvars(); ++j) {
            if (v[j] == 0) {
                continue;
            }
            if (!b.contains(detail::with_exponent(detail::with_exponent(v, j, v[j] - 1), j - 1, v[j - 1] + 1))) {
                return false;
            }
        }
    }
    return true;
}

// shad(B) = {x_i u : u in B, 1 <= i <= n}.
inline monomial_set shade(const monomial_set &b, std::size_t cap = default_enumeration_cap)
{
    detail::check_cap(checked_mul(b.size(), b.nvars()), cap, "shade");
    std::vector<monomial> out;
    out.reserve(b.size() * b.nvars());
    for (const auto &u : b) {
        for (std::size_t i = 1; i <= b.nvars(); ++i) {
            out.push_back(mul_var(u, var_index(i)));
        }
    }
    return monomial_set(b.nvars(), checked_add(b.degree(), 1), std::move(out));
}

inline monomial_set shade_iter(const monomial_set &b, std::uint64_t times, std::size_t cap = default_enumeration_cap)
{
    if (times < 1) {
        throw precondition_violation("shade_iter needs at least one iteration");
    }
    monomial_set cur = shade(b, cap);
    for (std::uint64_t i = 1; i < times; ++i) {
        cur = shade(cur, cap);
    }
    return cur;
}

// B^lex = L(w_B), the lexsegment with |B| elements.
struct lexification {
    monomial_set segment;
    monomial last;
};

inline lexification lexify(const monomial_set &b, std::size_t cap = default_enumeration_cap)
{
    if (b.empty()) {
        throw empty_set("lexify needs a nonempty set");
    }
    auto last = unrank(b.nvars(), b.degree(), b.size() - 1);
    auto segment = lexsegment(last, cap);
    return lexification{std::move(segment), std::move(last)};
}

// (m_1(B), ..., m_n(B)), zeros included.
inline std::vector<std::uint64_t> m_vector(const monomial_set &b)
{
    std::vector<std::uint64_t> m(b.nvars(), 0);
    for (const auto &w : b) {
        m[lambda_var(w).value() - 1] += 1;
    }
    return m;
}

// maxgen(B) = prod_{w in B} lambda(w); maxgen of the empty set is 1.
inline maxgen_monomial maxgen(const monomial_set &b)
{
    return maxgen_monomial(m_vector(b));
}

// Members of B whose max index is i.
inline monomial_set filter_by_max(const monomial_set &b, var_index i)
{
    std::vector<monomial> out;
    for (const auto &w : b) {
        if (!w.is_unit() && max_index(w) == i) {
            out.push_back(w);
        }
    }
    return monomial_set(b.nvars(), b.degree(), std::move(out));
}

// maxgen(S_{n,d}) = prod_i x_i^{C(d-2+i, d-1)}.
inline maxgen_monomial maxgen_Snd(std::size_t nvars, std::uint64_t degree)
{
    if (nvars == 0 || degree < 1) {
        throw precondition_violation("maxgen_Snd needs nvars >= 1 and degree >= 1");
    }
    std::vector<std::uint64_t> exps(nvars);
    for (std::size_t i = 1; i <= nvars; ++i) {
        exps[i - 1] = binomial(checked_add(degree, i) - 2, degree - 1);
    }
    return maxgen_monomial(std::move(exps));
}

// maxgen of the degree-d monomials in x_l..x_n: prod_{j=l}^n x_j^{C(d-1+j-l, d-1)}.
inline maxgen_monomial maxgen_Slnd(std::size_t first, std::size_t nvars, std::uint64_t degree)
{
    if (first < 1 || first > nvars || degree < 1) {
        throw precondition_violation("maxgen_Slnd needs 1 <= l <= nvars and degree >= 1");
    }
    std::vector<std::uint64_t> exps(nvars, 0);
    for (std::size_t j = first; j <= nvars; ++j) {
        exps[j - 1] = binomial(checked_add(degree - 1, j - first), degree - 1);
    }
    return maxgen_monomial(std::move(exps));
}

} // namespace gotz

#endif
