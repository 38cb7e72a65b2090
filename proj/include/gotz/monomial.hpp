#ifndef GOTZ_MONOMIAL_HPP
#define GOTZ_MONOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gotz/arith.hpp>
#include <gotz/error.hpp>

namespace gotz
{

// 1-based index of a variable x_i.
class var_index
{
public:
    constexpr explicit var_index(std::size_t value) noexcept : m_value(value) {}

    constexpr std::size_t value() const noexcept
    {
        return m_value;
    }

    friend constexpr auto operator<=>(var_index, var_index) = default;

private:
    std::size_t m_value;
};

// x_1^{a_1} ... x_n^{a_n}, stored as its exponent vector. Immutable after
// construction; the degree is cached and overflow-checked.
class monomial
{
public:
    explicit monomial(std::vector<std::uint64_t> exps) : m_exps(std::move(exps))
    {
        if (m_exps.empty()) {
            throw range_error("a monomial needs at least one variable");
        }
        for (auto e : m_exps) {
            m_degree = checked_add(m_degree, e);
        }
    }
    monomial(std::initializer_list<std::uint64_t> exps) : monomial(std::vector<std::uint64_t>(exps)) {}

    static monomial unit(std::size_t nvars)
    {
        return monomial(std::vector<std::uint64_t>(nvars, 0));
    }
    // x_i^power in nvars variables.
    static monomial variable(std::size_t nvars, var_index i, std::uint64_t power = 1)
    {
        if (i.value() < 1 || i.value() > nvars) {
            throw index_out_of_range("variable index " + std::to_string(i.value()) + " outside 1.."
                                     + std::to_string(nvars));
        }
        std::vector<std::uint64_t> exps(nvars, 0);
        exps[i.value() - 1] = power;
        return monomial(std::move(exps));
    }

    std::size_t nvars() const noexcept
    {
        return m_exps.size();
    }
    std::uint64_t degree() const noexcept
    {
        return m_degree;
    }
    bool is_unit() const noexcept
    {
        return m_degree == 0;
    }
    std::span<const std::uint64_t> exponents() const noexcept
    {
        return m_exps;
    }
    // Exponent of x_i, 1-based.
    std::uint64_t exponent(var_index i) const
    {
        if (i.value() < 1 || i.value() > nvars()) {
            throw index_out_of_range("variable index " + std::to_string(i.value()) + " outside 1.."
                                     + std::to_string(nvars()));
        }
        return m_exps[i.value() - 1];
    }
    // 0-based raw access.
    std::uint64_t operator[](std::size_t pos) const noexcept
    {
        return m_exps[pos];
    }

    friend bool operator==(const monomial &, const monomial &) = default;

private:
    std::vector<std::uint64_t> m_exps;
    std::uint64_t m_degree = 0;
};

namespace detail
{

inline void require_same_nvars(const monomial &u, const monomial &v)
{
    if (u.nvars() != v.nvars()) {
        throw dimension_mismatch("monomials live in different rings: " + std::to_string(u.nvars()) + " vs "
                                 + std::to_string(v.nvars()) + " variables");
    }
}

inline void require_non_unit(const monomial &u, const char *what)
{
    if (u.is_unit()) {
        throw unit_monomial(std::string(what) + " is undefined on the unit monomial");
    }
}

// Rebuild from a modified exponent vector; callers guarantee validity.
inline monomial with_exponent(const monomial &u, std::size_t pos, std::uint64_t e)
{
    std::vector<std::uint64_t> exps(u.exponents().begin(), u.exponents().end());
    exps[pos] = e;
    return monomial(std::move(exps));
}

} // namespace detail

// Lex order within S_{n,d}: the leftmost nonzero coordinate of a - b decides.
inline std::strong_ordering lex_compare(const monomial &u, const monomial &v)
{
    detail::require_same_nvars(u, v);
    if (u.degree() != v.degree()) {
        throw degree_mismatch("lex comparison needs equal degrees, got " + std::to_string(u.degree()) + " and "
                              + std::to_string(v.degree()));
    }
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        if (u[i] != v[i]) {
            return u[i] <=> v[i];
        }
    }
    return std::strong_ordering::equal;
}

// Strict weak ordering that sorts lex-descending (largest monomial first).
struct lex_greater {
    bool operator()(const monomial &u, const monomial &v) const
    {
        return lex_compare(u, v) > 0;
    }
};

inline var_index min_index(const monomial &u)
{
    detail::require_non_unit(u, "min");
    std::size_t i = 0;
    while (u[i] == 0) {
        ++i;
    }
    return var_index(i + 1);
}

inline var_index max_index(const monomial &u)
{
    detail::require_non_unit(u, "max");
    std::size_t i = u.nvars();
    while (u[i - 1] == 0) {
        --i;
    }
    return var_index(i);
}

// The last variable dividing u.
inline var_index lambda_var(const monomial &u)
{
    detail::require_non_unit(u, "lambda");
    return max_index(u);
}

inline bool divides(const monomial &v, const monomial &u)
{
    detail::require_same_nvars(u, v);
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        if (v[i] > u[i]) {
            return false;
        }
    }
    return true;
}

inline monomial mul(const monomial &u, const monomial &v)
{
    detail::require_same_nvars(u, v);
    std::vector<std::uint64_t> exps(u.nvars());
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        exps[i] = checked_add(u[i], v[i]);
    }
    return monomial(std::move(exps));
}

inline monomial div(const monomial &u, const monomial &v)
{
    detail::require_same_nvars(u, v);
    std::vector<std::uint64_t> exps(u.nvars());
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        if (v[i] > u[i]) {
            throw not_divisible("x" + std::to_string(i + 1) + " exponent " + std::to_string(v[i])
                                + " exceeds dividend exponent " + std::to_string(u[i]));
        }
        exps[i] = u[i] - v[i];
    }
    return monomial(std::move(exps));
}

inline monomial operator*(const monomial &u, const monomial &v)
{
    return mul(u, v);
}

inline monomial operator/(const monomial &u, const monomial &v)
{
    return div(u, v);
}

// u * x_i^k.
inline monomial mul_var(const monomial &u, var_index i, std::uint64_t k = 1)
{
    return mul(u, monomial::variable(u.nvars(), i, k));
}

// The indices i_1 <= ... <= i_d with u = x_{i_1} ... x_{i_d}.
inline std::vector<std::size_t> sorted_factors(const monomial &u)
{
    std::vector<std::size_t> out;
    out.reserve(u.degree());
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        out.insert(out.end(), u[i], i + 1);
    }
    return out;
}

// x_{i_1} ... x_{i_k}: the first k sorted factors of u.
inline monomial prefix(const monomial &u, std::uint64_t k)
{
    if (k > u.degree()) {
        throw range_error("prefix degree " + std::to_string(k) + " exceeds degree " + std::to_string(u.degree()));
    }
    std::vector<std::uint64_t> exps(u.nvars(), 0);
    for (std::size_t i = 0; i < u.nvars() && k > 0; ++i) {
        const auto take = std::min(k, u[i]);
        exps[i] = take;
        k -= take;
    }
    return monomial(std::move(exps));
}

// Canonical text: "1", or factors "x<i>[^<e>]" joined by '*', ascending i.
inline std::string format_monomial(const monomial &u)
{
    if (u.is_unit()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        if (u[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 'x';
        out += std::to_string(i + 1);
        if (u[i] != 1) {
            out += '^';
            out += std::to_string(u[i]);
        }
    }
    return out;
}

inline std::ostream &operator<<(std::ostream &os, const monomial &u)
{
    return os << format_monomial(u);
}

namespace detail
{

class monomial_parser
{
public:
    monomial_parser(std::string_view text, std::size_t nvars) : m_text(text), m_nvars(nvars) {}

    monomial run()
    {
        if (m_nvars == 0) {
            throw range_error("a monomial needs at least one variable");
        }
        skip_ws();
        if (at_end()) {
            throw parse_error("empty monomial", m_pos);
        }
        if (m_text.find(',') != std::string_view::npos || std::isdigit(static_cast<unsigned char>(peek()))) {
            return exponent_list();
        }
        return product();
    }

private:
    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return m_text[m_pos];
    }
    void skip_ws()
    {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) {
            ++m_pos;
        }
    }

    std::uint64_t integer()
    {
        skip_ws();
        const auto start = m_pos;
        std::uint64_t value = 0;
        const auto *first = m_text.data() + m_pos;
        const auto *last = m_text.data() + m_text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) {
            throw parse_error("integer does not fit 64 bits", start);
        }
        if (ec != std::errc{} || ptr == first) {
            throw parse_error("expected an integer", start);
        }
        m_pos += static_cast<std::size_t>(ptr - first);
        return value;
    }

    monomial exponent_list()
    {
        std::vector<std::uint64_t> exps;
        while (true) {
            exps.push_back(integer());
            skip_ws();
            if (at_end()) {
                break;
            }
            if (peek() != ',') {
                throw parse_error("expected ',' in exponent list", m_pos);
            }
            ++m_pos;
        }
        // A bare "1" is the unit monomial, not a one-variable exponent list.
        if (exps.size() == 1 && exps[0] == 1 && m_text.find(',') == std::string_view::npos) {
            return monomial::unit(m_nvars);
        }
        if (exps.size() != m_nvars) {
            throw parse_error("exponent list has " + std::to_string(exps.size()) + " entries, expected "
                                  + std::to_string(m_nvars),
                              0);
        }
        return monomial(std::move(exps));
    }

    monomial product()
    {
        std::vector<std::uint64_t> exps(m_nvars, 0);
        while (true) {
            skip_ws();
            if (at_end() || peek() != 'x') {
                throw parse_error("expected a factor 'x<index>'", m_pos);
            }
            ++m_pos;
            const auto idx_pos = m_pos;
            const auto idx = integer();
            if (idx < 1 || idx > m_nvars) {
                throw index_out_of_range("variable x" + std::to_string(idx) + " at position "
                                         + std::to_string(idx_pos) + " outside x1..x" + std::to_string(m_nvars));
            }
            std::uint64_t e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++m_pos;
                e = integer();
            }
            exps[idx - 1] = checked_add(exps[idx - 1], e);
            skip_ws();
            if (at_end()) {
                break;
            }
            if (peek() != '*') {
                throw parse_error("expected '*' between factors", m_pos);
            }
            ++m_pos;
        }
        return monomial(std::move(exps));
    }

    std::string_view m_text;
    std::size_t m_nvars;
    std::size_t m_pos = 0;
};

} // namespace detail

// Accepts the canonical product form ("x2^2*x3", "1") and the exponent-list
// form ("0,2,1,0"). Repeated factors multiply.
inline monomial parse_monomial(std::string_view text, std::size_t nvars)
{
    return detail::monomial_parser(text, nvars).run();
}

} // namespace gotz

template <>
struct std::hash<gotz::monomial> {
    std::size_t operator()(const gotz::monomial &u) const noexcept
    {
        std::size_t h = u.nvars();
        for (auto e : u.exponents()) {
            h ^= std::hash<std::uint64_t>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

#endif
