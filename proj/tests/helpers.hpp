#ifndef GOTZ_TESTS_HELPERS_HPP
#define GOTZ_TESTS_HELPERS_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <gotz/gotz.hpp>

namespace th
{

inline gotz::monomial m(const std::string &text, std::size_t n)
{
    return gotz::parse_monomial(text, n);
}

// A set of degree-d monomials given as text.
inline gotz::monomial_set set(std::size_t n, std::uint64_t d, std::initializer_list<const char *> texts)
{
    std::vector<gotz::monomial> v;
    for (const auto *t : texts) {
        v.push_back(gotz::parse_monomial(t, n));
    }
    return gotz::monomial_set(n, d, std::move(v));
}

} // namespace th

#endif
