// Brute-force reference implementations for the tests. Nothing here calls
// into the library except to convert values at the boundary: monomials are
// plain exponent vectors, sets are std::set, and every quantity is computed
// straight from its definition.
#ifndef GOTZ_TESTS_ORACLE_HPP
#define GOTZ_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include <gotz/monomial.hpp>
#include <gotz/lex.hpp>

namespace oracle
{

using expv = std::vector<std::uint64_t>;

// Lex order is lexicographic order on exponent vectors; "descending" puts x_1^d first.
using desc_set = std::set<expv, std::greater<>>;

inline std::uint64_t deg(const expv &e)
{
    std::uint64_t d = 0;
    for (auto x : e) {
        d += x;
    }
    return d;
}

inline std::size_t max_var(const expv &e)
{
    std::size_t m = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) {
            m = i + 1;
        }
    }
    return m;
}

// S_{n,d} in descending lex order, by nested recursion.
inline std::vector<expv> all(std::size_t n, std::uint64_t d)
{
    std::vector<expv> out;
    expv cur(n, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (std::uint64_t a = left + 1; a-- > 0;) {
            cur[i] = a;
            rec(i + 1, left - a);
        }
        cur[i] = 0;
    };
    if (n > 0) {
        rec(0, d);
    }
    return out;
}

inline desc_set segment(const expv &u)
{
    desc_set out;
    for (auto &v : all(u.size(), deg(u))) {
        if (v >= u) {
            out.insert(v);
        }
    }
    return out;
}

// Fixed point under every move x_i v / x_j with i < j.
inline desc_set closure(const expv &u)
{
    desc_set cur{u};
    bool grew = true;
    while (grew) {
        grew = false;
        const auto snapshot = cur;
        for (const auto &v : snapshot) {
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (v[j] == 0) {
                    continue;
                }
                for (std::size_t i = 0; i < j; ++i) {
                    auto w = v;
                    --w[j];
                    ++w[i];
                    grew = cur.insert(w).second || grew;
                }
            }
        }
    }
    return cur;
}

inline bool stable(const desc_set &b)
{
    for (const auto &v : b) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            for (std::size_t i = 0; i < j && v[j] > 0; ++i) {
                auto w = v;
                --w[j];
                ++w[i];
                if (!b.count(w)) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline desc_set shade(const desc_set &b)
{
    desc_set out;
    for (const auto &v : b) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto w = v;
            ++w[i];
            out.insert(w);
        }
    }
    return out;
}

// The top |b| elements of S_{n,d}.
inline desc_set lex_of(const desc_set &b)
{
    const auto &first = *b.begin();
    const auto everything = all(first.size(), deg(first));
    return desc_set(everything.begin(), everything.begin() + static_cast<std::ptrdiff_t>(b.size()));
}

// The factor list of u, nondecreasing.
inline std::vector<std::size_t> factors(const expv &u)
{
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < u.size(); ++i) {
        f.insert(f.end(), u[i], i + 1);
    }
    return f;
}

// v is a gap of u iff L(u) contains v but B(u) does not. Evaluated on the
// definition, without the index criterion.
inline desc_set gaps(const expv &u)
{
    desc_set out;
    const auto b = closure(u);
    for (const auto &v : segment(u)) {
        if (!b.count(v)) {
            out.insert(v);
        }
    }
    return out;
}

inline expv maxgen(const desc_set &b, std::size_t n)
{
    expv m(n, 0);
    for (const auto &v : b) {
        m[max_var(v) - 1] += 1;
    }
    return m;
}

// {v : upper > v >= lower}.
inline desc_set interval(const expv &upper, const expv &lower)
{
    desc_set out;
    for (auto &v : all(upper.size(), deg(upper))) {
        if (v < upper && v >= lower) {
            out.insert(v);
        }
    }
    return out;
}

// The r lex-smallest members of L(u), and the member just above them.
struct chain {
    desc_set members;
    expv next;
    bool has_next;
};

inline chain cogaps(const expv &u, std::size_t r)
{
    const auto seg = segment(u);
    std::vector<expv> v(seg.begin(), seg.end());
    chain c{};
    for (std::size_t i = v.size() - r; i < v.size(); ++i) {
        c.members.insert(v[i]);
    }
    c.has_next = r < v.size();
    if (c.has_next) {
        c.next = v[v.size() - r - 1];
    }
    return c;
}

// u is Gotzmann when B(u) is a Gotzmann set: |shad B(u)| equals |shad B(u)^lex|.
inline bool gotzmann(const expv &u)
{
    const auto b = closure(u);
    return shade(b).size() == shade(lex_of(b)).size();
}

inline bool gotzmann_set(const desc_set &b)
{
    return shade(b).size() == shade(lex_of(b)).size();
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Conversions at the boundary.
inline gotz::monomial mono(const expv &e)
{
    return gotz::monomial(e);
}

inline expv vec(const gotz::monomial &u)
{
    return expv(u.exponents().begin(), u.exponents().end());
}

inline desc_set to_set(const gotz::monomial_set &s)
{
    desc_set out;
    for (const auto &m : s) {
        out.insert(vec(m));
    }
    return out;
}

inline gotz::monomial_set from_set(const desc_set &s, std::size_t n, std::uint64_t d)
{
    std::vector<gotz::monomial> members;
    for (const auto &e : s) {
        members.emplace_back(e);
    }
    return gotz::monomial_set(n, d, std::move(members));
}

// Fixed-seed generator for property tests.
class gen
{
public:
    explicit gen(std::uint64_t seed) : m_rng(seed) {}

    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
    {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(m_rng);
    }

    expv monomial(std::size_t n, std::uint64_t d)
    {
        expv e(n, 0);
        for (std::uint64_t k = 0; k < d; ++k) {
            ++e[uniform(0, n - 1)];
        }
        return e;
    }

    bool coin()
    {
        return uniform(0, 1) == 1;
    }

private:
    std::mt19937_64 m_rng;
};

} // namespace oracle

#endif
