#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace gotz;
using th::m;

TEST(BorelClosure, KnownValues)
{
    EXPECT_EQ(borel_closure(m("x2*x3", 4)), th::set(4, 2, {"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3"}));
    EXPECT_EQ(borel_closure(m("x1^4", 4)), th::set(4, 4, {"x1^4"}));
    EXPECT_EQ(borel_closure(m("x2^2*x3", 4)),
              th::set(4, 3, {"x2^2*x3", "x1*x2*x3", "x1^2*x3", "x2^3", "x1*x2^2", "x1^2*x2", "x1^3"}));
    EXPECT_THROW(borel_closure(m("x4^6", 4), 20), enumeration_cap_exceeded);
}

TEST(BorelClosure, MatchesFixedPointOracle)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint64_t d = 0; d <= 5; ++d) {
            for (const auto &u : oracle::all(n, d)) {
                const auto want = oracle::closure(u);
                const auto got = borel_closure(monomial(u));
                EXPECT_EQ(oracle::to_set(got), want);
                EXPECT_EQ(borel_size(monomial(u)), want.size());
            }
        }
    }
}

TEST(BorelSize, KnownValues)
{
    for (std::uint64_t k = 0; k <= 12; ++k) {
        EXPECT_EQ(borel_size(mul_var(monomial::unit(4), var_index(2), k)), k + 1);
    }
    for (std::uint64_t r = 0; r <= 6; ++r) {
        for (std::uint64_t s = 0; s <= 6; ++s) {
            const monomial w{0, r, s, 0};
            EXPECT_EQ(borel_size(w), oracle::choose(s + 1, 2) + (r + 1) * (s + 1));
        }
    }
    EXPECT_EQ(borel_size(m("x2*x3", 4)), 5u);
    EXPECT_EQ(borel_size(m("x2^2*x3", 4)), 7u);
    EXPECT_EQ(borel_size(monomial::unit(3)), 1u);
}

TEST(BorelSize, CacheReuseIsConsistent)
{
    borel_size_cache cache;
    oracle::gen g(3);
    for (int it = 0; it < 200; ++it) {
        const auto e = g.monomial(5, g.uniform(0, 6));
        EXPECT_EQ(cache(monomial(e)), oracle::closure(e).size());
    }
}

TEST(BorelStable, KnownValues)
{
    EXPECT_TRUE(is_borel_stable(th::set(4, 2, {"x1^2", "x1*x2", "x2^2"})));
    EXPECT_TRUE(is_borel_stable(th::set(4, 2, {"x1^2", "x1*x2", "x1*x3", "x2^2"})));
    EXPECT_FALSE(is_borel_stable(th::set(4, 2, {"x2^2"})));
    EXPECT_TRUE(is_borel_stable(monomial_set(4, 2)));
}

TEST(BorelStable, MatchesOracleOnRandomSubsets)
{
    oracle::gen g(5);
    for (int it = 0; it < 500; ++it) {
        const auto n = g.uniform(1, 4);
        const auto d = g.uniform(1, 3);
        oracle::desc_set b;
        for (const auto &v : oracle::all(n, d)) {
            if (g.uniform(0, 3) != 0) {
                b.insert(v);
            }
        }
        EXPECT_EQ(is_borel_stable(oracle::from_set(b, n, d)), oracle::stable(b));
    }
}

TEST(Shade, KnownValues)
{
    EXPECT_EQ(shade(th::set(4, 2, {"x1^2", "x1*x2"})),
              th::set(4, 3, {"x1^3", "x1^2*x2", "x1^2*x3", "x1^2*x4", "x1*x2^2", "x1*x2*x3", "x1*x2*x4"}));
    EXPECT_EQ(shade(borel_closure(m("x2*x3", 4))).size(), 14u);
    EXPECT_TRUE(shade(monomial_set(4, 2)).empty());
    EXPECT_EQ(shade_iter(th::set(2, 1, {"x1"}), 3), th::set(2, 4, {"x1^4", "x1^3*x2", "x1^2*x2^2", "x1*x2^3"}));
    EXPECT_THROW(shade_iter(th::set(2, 1, {"x1"}), 0), precondition_violation);
}

TEST(Lexify, KnownValues)
{
    auto lx = lexify(th::set(4, 2, {"x1^2", "x1*x2", "x1*x3", "x2^2"}));
    EXPECT_EQ(lx.last, m("x1*x4", 4));
    EXPECT_EQ(lx.segment, lexsegment(m("x1*x4", 4)));

    const auto seg = lexsegment(m("x2*x3", 4));
    lx = lexify(seg);
    EXPECT_EQ(lx.segment, seg);
    EXPECT_EQ(lx.last, m("x2*x3", 4));

    lx = lexify(borel_closure(m("x2*x3", 4)));
    EXPECT_EQ(lx.segment, th::set(4, 2, {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2"}));
    EXPECT_EQ(lx.last, m("x2^2", 4));
    EXPECT_EQ(shade(lx.segment).size(), 13u);

    EXPECT_THROW(lexify(monomial_set(4, 2)), empty_set);
}

TEST(Maxgen, KnownValues)
{
    EXPECT_EQ(maxgen(borel_closure(m("x2*x3", 4))), m("x1*x2^2*x3^2", 4));
    EXPECT_EQ(maxgen(lexsegment(m("x1*x4", 4))), m("x1*x2*x3*x4", 4));
    EXPECT_EQ(maxgen(th::set(4, 3, {"x1^3"})), m("x1", 4));
    EXPECT_EQ(maxgen(monomial_set(4, 3)), monomial::unit(4));
    EXPECT_THROW(maxgen(monomial_set(4, 0, {monomial::unit(4)})), unit_monomial);
    EXPECT_EQ(m_vector(borel_closure(m("x2*x3", 4))), (std::vector<std::uint64_t>{1, 2, 2, 0}));
}

TEST(Maxgen, SndKnownValues)
{
    EXPECT_EQ(maxgen_Snd(3, 2), m("x1*x2^2*x3^3", 3));
    EXPECT_EQ(maxgen_Snd(5, 1), m("x1*x2*x3*x4*x5", 5));
    EXPECT_EQ(maxgen_Slnd(3, 4, 2), m("x3*x4^2", 4));
    EXPECT_THROW(maxgen_Snd(3, 0), precondition_violation);
    EXPECT_THROW(maxgen_Slnd(5, 4, 2), precondition_violation);
}

TEST(Maxgen, SndAndSlndMatchEnumeration)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::uint64_t d = 1; d <= 7; ++d) {
            const auto all = oracle::all(n, d);
            EXPECT_EQ(oracle::vec(maxgen_Snd(n, d)), oracle::maxgen(oracle::desc_set(all.begin(), all.end()), n));
            for (std::size_t l = 1; l <= n; ++l) {
                oracle::desc_set tail;
                for (const auto &v : all) {
                    bool ok = true;
                    for (std::size_t i = 0; i + 1 < l; ++i) {
                        ok = ok && v[i] == 0;
                    }
                    if (ok) {
                        tail.insert(v);
                    }
                }
                EXPECT_EQ(oracle::vec(maxgen_Slnd(l, n, d)), oracle::maxgen(tail, n)) << n << ' ' << l << ' ' << d;
            }
        }
    }
}

TEST(Maxgen, FilterByMax)
{
    const auto b = borel_closure(m("x2*x3", 4));
    EXPECT_EQ(filter_by_max(b, var_index(3)), th::set(4, 2, {"x1*x3", "x2*x3"}));
    EXPECT_TRUE(filter_by_max(b, var_index(4)).empty());
}
