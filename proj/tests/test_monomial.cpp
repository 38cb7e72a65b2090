#include <gtest/gtest.h>

#include <sstream>
#include <unordered_set>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace gotz;
using th::m;

TEST(Binomial, SmallValuesMatchPascal)
{
    for (std::uint64_t n = 0; n < 40; ++n) {
        for (std::uint64_t k = 0; k <= n + 2; ++k) {
            EXPECT_EQ(binomial(n, k), oracle::choose(n, k)) << n << " choose " << k;
        }
    }
}

TEST(Binomial, LargeExactAndOverflow)
{
    EXPECT_EQ(binomial(62, 31), 465428353255261088ULL);
    EXPECT_EQ(binomial(1'000'000, 2), 499999500000ULL);
    EXPECT_THROW(binomial(200, 100), overflow_error);
    EXPECT_THROW(checked_add(std::uint64_t{~0ULL}, std::uint64_t{1}), overflow_error);
    EXPECT_THROW(checked_mul(std::uint64_t{1} << 40, std::uint64_t{1} << 40), overflow_error);
}

TEST(Monomial, ConstructionAndAccessors)
{
    monomial u{0, 2, 1, 0};
    EXPECT_EQ(u.nvars(), 4u);
    EXPECT_EQ(u.degree(), 3u);
    EXPECT_EQ(u.exponent(var_index(2)), 2u);
    EXPECT_FALSE(u.is_unit());
    EXPECT_TRUE(monomial::unit(3).is_unit());
    EXPECT_EQ(monomial::variable(4, var_index(3), 2), (monomial{0, 0, 2, 0}));
    EXPECT_THROW(monomial::variable(4, var_index(5)), index_out_of_range);
    EXPECT_THROW(u.exponent(var_index(0)), index_out_of_range);
    EXPECT_THROW(monomial(std::vector<std::uint64_t>{}), range_error);
    EXPECT_THROW((monomial{~0ULL, 1}), overflow_error);
}

TEST(LexCompare, KnownValues)
{
    EXPECT_EQ(lex_compare(m("x1^2", 4), m("x1*x2", 4)), std::strong_ordering::greater);
    EXPECT_EQ(lex_compare(m("x2*x3", 4), m("x2*x3", 4)), std::strong_ordering::equal);
    EXPECT_EQ(lex_compare(m("x1*x4", 4), m("x2^2", 4)), std::strong_ordering::greater);
    EXPECT_EQ(lex_compare(m("x2^2", 4), m("x1*x4", 4)), std::strong_ordering::less);
}

TEST(LexCompare, Errors)
{
    EXPECT_THROW(lex_compare(m("x1", 3), m("x1", 4)), dimension_mismatch);
    EXPECT_THROW(lex_compare(m("x1", 3), m("x1^2", 3)), degree_mismatch);
}

TEST(LexCompare, AgreesWithVectorOrderExhaustively)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint64_t d = 0; d <= 4; ++d) {
            const auto all = oracle::all(n, d);
            for (const auto &a : all) {
                for (const auto &b : all) {
                    EXPECT_EQ(lex_compare(monomial(a), monomial(b)), a <=> b);
                }
            }
        }
    }
}

TEST(Indices, KnownValues)
{
    const auto u = m("x2^3*x3*x4^2", 4);
    EXPECT_EQ(min_index(u).value(), 2u);
    EXPECT_EQ(max_index(u).value(), 4u);
    EXPECT_EQ(lambda_var(u).value(), 4u);
    const auto p = m("x1^5", 4);
    EXPECT_EQ(min_index(p).value(), 1u);
    EXPECT_EQ(max_index(p).value(), 1u);
    const auto q = m("x3*x4", 4);
    EXPECT_EQ(min_index(q).value(), 3u);
    EXPECT_EQ(lambda_var(q).value(), 4u);
    EXPECT_THROW(min_index(monomial::unit(4)), unit_monomial);
    EXPECT_THROW(max_index(monomial::unit(4)), unit_monomial);
    EXPECT_THROW(lambda_var(monomial::unit(4)), unit_monomial);
}

TEST(Prefix, KnownValues)
{
    EXPECT_EQ(prefix(m("x2^2*x3", 4), 2), m("x2^2", 4));
    EXPECT_EQ(prefix(m("x2^2*x3", 4), 0), monomial::unit(4));
    EXPECT_EQ(prefix(m("x2*x3^2*x4", 4), 3), m("x2*x3^2", 4));
    EXPECT_THROW(prefix(m("x2*x3", 4), 3), range_error);
}

TEST(Prefix, MatchesTruncatedFactorList)
{
    oracle::gen g(11);
    for (int it = 0; it < 300; ++it) {
        const auto n = g.uniform(1, 5);
        const auto e = g.monomial(n, g.uniform(0, 8));
        const auto f = oracle::factors(e);
        const auto k = g.uniform(0, f.size());
        oracle::expv want(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            ++want[f[i] - 1];
        }
        EXPECT_EQ(prefix(monomial(e), k), monomial(want));
        EXPECT_EQ(sorted_factors(monomial(e)), f);
    }
}

TEST(Arithmetic, MulDiv)
{
    EXPECT_EQ(mul(m("x2*x3", 4), m("x4", 4)), m("x2*x3*x4", 4));
    EXPECT_EQ(div(m("x2^2*x3", 4), m("x2", 4)), m("x2*x3", 4));
    EXPECT_THROW(div(m("x2*x3", 4), m("x4", 4)), not_divisible);
    EXPECT_THROW(mul(m("x1", 3), m("x1", 4)), dimension_mismatch);
    EXPECT_TRUE(divides(m("x2", 4), m("x2^2*x3", 4)));
    EXPECT_FALSE(divides(m("x4", 4), m("x2^2*x3", 4)));
    EXPECT_EQ(m("x1", 3) * m("x3", 3), m("x1*x3", 3));
    EXPECT_EQ(m("x1*x3", 3) / m("x3", 3), m("x1", 3));
    EXPECT_EQ(mul_var(m("x1", 3), var_index(3), 4), m("x1*x3^4", 3));
}

TEST(Parse, KnownValues)
{
    EXPECT_EQ(m("x2^2*x3", 4), (monomial{0, 2, 1, 0}));
    EXPECT_EQ(m("1", 3), (monomial{0, 0, 0}));
    EXPECT_THROW(m("x5", 4), index_out_of_range);
    EXPECT_THROW(m("x0", 4), index_out_of_range);
}

TEST(Parse, Forms)
{
    EXPECT_EQ(m("0,2,1,0", 4), (monomial{0, 2, 1, 0}));
    EXPECT_EQ(m(" x3 * x1 ", 3), (monomial{1, 0, 1}));
    EXPECT_EQ(m("x2*x2^3", 2), (monomial{0, 4}));
    EXPECT_THROW(m("0,2,1", 4), error);
}

TEST(Parse, ErrorsCarryPosition)
{
    try {
        m("x1*y2", 3);
        FAIL() << "expected parse_error";
    } catch (const parse_error &e) {
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(m("", 3), parse_error);
    EXPECT_THROW(m("x1*", 3), parse_error);
    EXPECT_THROW(m("x1^", 3), parse_error);
    EXPECT_THROW(m("x1 x2", 3), parse_error);
}

TEST(Format, Canonical)
{
    EXPECT_EQ(format_monomial(monomial{0, 2, 1, 0}), "x2^2*x3");
    EXPECT_EQ(format_monomial(monomial::unit(4)), "1");
    EXPECT_EQ(format_monomial(monomial{1, 0, 0, 7}), "x1*x4^7");
    std::ostringstream os;
    os << monomial{0, 1};
    EXPECT_EQ(os.str(), "x2");
}

TEST(Format, RoundTripsRandomMonomials)
{
    oracle::gen g(7);
    for (int it = 0; it < 500; ++it) {
        const auto n = g.uniform(1, 6);
        const monomial u(g.monomial(n, g.uniform(0, 12)));
        EXPECT_EQ(parse_monomial(format_monomial(u), n), u);
    }
}

TEST(Hash, EqualMonomialsHashEqual)
{
    std::unordered_set<monomial> s;
    s.insert(m("x1*x2", 3));
    s.insert(m("x2*x1", 3));
    s.insert(m("0,1,1", 3));
    EXPECT_EQ(s.size(), 2u);
}
