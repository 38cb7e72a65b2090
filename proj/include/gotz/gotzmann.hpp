#ifndef GOTZ_GOTZMANN_HPP
#define GOTZ_GOTZMANN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gotz/arith.hpp>
#include <gotz/borel.hpp>
#include <gotz/error.hpp>
#include <gotz/gaps.hpp>
#include <gotz/lex.hpp>
#include <gotz/monomial.hpp>

namespace gotz
{

// |shad(B)| = |shad(B^lex)|, by brute force. For Borel-stable B the m-vector
// criterion m_i(B) = m_i(B^lex) is evaluated as well and must agree.
inline bool is_gotzmann_set_oracle(const monomial_set &b, std::size_t cap = default_enumeration_cap)
{
    if (b.empty()) {
        throw empty_set("a Gotzmann set must be nonempty");
    }
    if (b.degree() < 1) {
        throw precondition_violation("Gotzmann sets live in degree >= 1");
    }
    const auto lex = lexify(b, cap);
    const bool by_shade = shade(b, cap).size() == shade(lex.segment, cap).size();
    if (is_borel_stable(b)) {
        const bool by_counts = m_vector(b) == m_vector(lex.segment);
        if (by_counts != by_shade) {
            throw internal_inconsistency("shade and m-vector criteria disagree on a Borel-stable set");
        }
    }
    return by_shade;
}

enum class verdict_method { oracle, closed_form };

inline const char *to_string(verdict_method m)
{
    return m == verdict_method::oracle ? "oracle" : "closed_form";
}

struct verdict {
    monomial subject;
    bool is_gotzmann;
    verdict_method method;
    // maxgen(gaps(u)) and maxgen(cogaps(u)); absent when too costly to compute.
    std::optional<maxgen_monomial> witness_gaps;
    std::optional<maxgen_monomial> witness_cogaps;
    // Closed-form threshold on the last exponent, known for n <= 4.
    std::optional<std::uint64_t> threshold;
};

struct threshold_report {
    std::uint64_t b;
    std::uint64_t c;
    std::uint64_t threshold;
    std::int64_t f0;
    // f(t) - h(t), independent of t.
    std::int64_t constant_gap;
};

// x_1^a x_2^b x_3^t is Gotzmann in S_3 iff t >= C(b, 2).
inline std::uint64_t threshold_n3(std::uint64_t b)
{
    return binomial(b, 2);
}

namespace detail
{

inline std::uint64_t exact_third(std::uint64_t x, const char *what)
{
    if (x % 3 != 0) {
        throw internal_inconsistency(std::string(what) + " is not divisible by 3");
    }
    return x / 3;
}

// (b+1) C(b,2) / 3, which is C(b+1, 3).
inline std::uint64_t third_b_plus_1_choose(std::uint64_t b)
{
    return exact_third(checked_mul(b + 1, binomial(b, 2)), "(b+1) C(b,2)");
}

} // namespace detail

// x_1^a x_2^b x_3^c x_4^t is Gotzmann in S_4 iff t >= threshold.
inline threshold_report threshold_n4(std::uint64_t b, std::uint64_t c)
{
    const auto cb2 = binomial(b, 2);
    const auto cc12 = binomial(checked_add(c, 1), 2);
    const auto cc13 = binomial(checked_add(c, 1), 3);
    const auto nested = binomial(cb2, 2);
    const auto b_term = detail::exact_third(checked_mul(checked_add(b, 4), cb2), "(b+4) C(b,2)");
    const auto c_term = checked_mul(checked_add(b, 1), cc12);

    threshold_report rep{};
    rep.b = b;
    rep.c = c;
    rep.threshold = checked_sub(checked_add(checked_add(checked_add(nested, b_term), c_term), cc13), c);

    const auto third = detail::third_b_plus_1_choose(b);
    rep.f0 = checked_sub(
        to_signed(checked_add(checked_add(checked_add(third, checked_mul(c, cb2)), c_term), cc13)), to_signed(c));
    rep.constant_gap = to_signed(checked_add(checked_add(checked_add(third, c_term), cc13), nested));
    return rep;
}

// f(t) = f(0) + t C(b,2): the x_4 exponent of maxgen(gaps(x_2^b x_3^c x_4^t)).
inline std::int64_t f_of_t(std::uint64_t b, std::uint64_t c, std::uint64_t t)
{
    return checked_add(threshold_n4(b, c).f0, to_signed(checked_mul(t, binomial(b, 2))));
}

// h(t) = (c+t) C(b,2) - C(C(b,2), 2) - c. Negative values occur (e.g. b = 0).
inline std::int64_t h_of_t(std::uint64_t b, std::uint64_t c, std::uint64_t t)
{
    const auto cb2 = binomial(b, 2);
    return checked_sub(checked_sub(to_signed(checked_mul(checked_add(c, t), cb2)), to_signed(binomial(cb2, 2))),
                       to_signed(c));
}

namespace detail
{

inline std::optional<std::uint64_t> closed_form_threshold(const monomial &u)
{
    switch (u.nvars()) {
    case 1:
    case 2:
        return 0;
    case 3:
        return threshold_n3(u[1]);
    case 4:
        return threshold_n4(u[1], u[2]).threshold;
    default:
        return std::nullopt;
    }
}

} // namespace detail

// maxgen(gaps(u)) = maxgen(cogaps(u)), computed from the enumerated gap report.
// The unit monomial counts as Gotzmann.
inline verdict is_gotzmann_monomial_oracle(const monomial &u, std::size_t cap = default_enumeration_cap)
{
    auto threshold = detail::closed_form_threshold(u);
    if (u.is_unit()) {
        return verdict{u, true, verdict_method::oracle, u, u, threshold};
    }
    auto rep = analyze_gaps(u, cap);
    const bool ok = rep.maxgen_gaps == rep.maxgen_cogaps;
    return verdict{u, ok, verdict_method::oracle, std::move(rep.maxgen_gaps), std::move(rep.maxgen_cogaps),
                   threshold};
}

// Thresholds for n <= 4, after discarding x_1 (which never matters). The
// witnesses come from the maxgen-of-gaps formula and a predecessor walk of
// that many steps; the walk is skipped when it would exceed cap.
inline verdict is_gotzmann_closed_form(const monomial &u, std::size_t cap = default_enumeration_cap)
{
    if (u.nvars() >= 5) {
        throw unsupported_dimension("no closed form is known for " + std::to_string(u.nvars())
                                    + " variables; use the oracle");
    }
    const auto threshold = detail::closed_form_threshold(u);
    const bool ok = u[u.nvars() - 1] >= *threshold;
    verdict v{u, ok, verdict_method::closed_form, std::nullopt, std::nullopt, threshold};
    if (u.is_unit()) {
        v.witness_gaps = u;
        v.witness_cogaps = u;
        return v;
    }
    v.witness_gaps = maxgen_gaps_formula(u);
    const auto g = v.witness_gaps->degree();
    if (g <= cap) {
        v.witness_cogaps = predecessor_walk(u, g).maxgen;
    }
    return v;
}

enum class padding_method { automatic, oracle };

// Least k <= max_k with u x_n^k Gotzmann. Closed form for n <= 4 under
// padding_method::automatic; otherwise a binary search over the oracle,
// which relies on the Gotzmann region being upward closed in k. Every
// verdict evaluated along the way is checked against that monotonicity.
inline std::uint64_t minimal_padding(const monomial &u, std::uint64_t max_k,
                                     padding_method method = padding_method::automatic,
                                     std::size_t cap = default_enumeration_cap)
{
    const auto n = u.nvars();
    if (method == padding_method::automatic && n <= 4) {
        const auto threshold = *detail::closed_form_threshold(u);
        const auto k = threshold > u[n - 1] ? threshold - u[n - 1] : 0;
        if (k > max_k) {
            throw not_found_within_cap("padding " + std::to_string(k) + " exceeds cap " + std::to_string(max_k));
        }
        return k;
    }

    std::map<std::uint64_t, bool> seen;
    auto gotzmann_at = [&](std::uint64_t k) {
        const bool r = is_gotzmann_monomial_oracle(mul_var(u, var_index(n), k), cap).is_gotzmann;
        seen.emplace(k, r);
        return r;
    };
    if (!gotzmann_at(max_k)) {
        throw not_found_within_cap("no Gotzmann padding of " + format_monomial(u) + " up to x" + std::to_string(n)
                                   + "^" + std::to_string(max_k));
    }
    std::uint64_t lo = 0;
    std::uint64_t hi = max_k;
    while (lo < hi) {
        const auto mid = lo + (hi - lo) / 2;
        if (gotzmann_at(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if (lo > 0) {
        gotzmann_at(lo - 1);
    }
    bool reached = false;
    for (const auto &[k, r] : seen) {
        if (reached && !r) {
            throw internal_inconsistency("Gotzmann verdicts of " + format_monomial(u)
                                         + " x_n^k are not monotone in k");
        }
        reached = reached || r;
    }
    if (seen.at(lo) != true || (lo > 0 && seen.at(lo - 1))) {
        throw internal_inconsistency("padding search for " + format_monomial(u) + " did not isolate a boundary");
    }
    return lo;
}

} // namespace gotz

#endif
