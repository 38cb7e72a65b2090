#ifndef GOTZ_ERROR_HPP
#define GOTZ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gotz
{

// Every failure raised by the library derives from gotz::error, so callers
// that only care about "something went wrong" can catch a single type.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define GOTZ_DEFINE_ERROR(name)                                                                                        \
    class name : public error                                                                                          \
    {                                                                                                                  \
    public:                                                                                                            \
        using error::error;                                                                                            \
    }

GOTZ_DEFINE_ERROR(dimension_mismatch);
GOTZ_DEFINE_ERROR(degree_mismatch);
GOTZ_DEFINE_ERROR(unit_monomial);
GOTZ_DEFINE_ERROR(range_error);
GOTZ_DEFINE_ERROR(not_divisible);
GOTZ_DEFINE_ERROR(index_out_of_range);
GOTZ_DEFINE_ERROR(overflow_error);
GOTZ_DEFINE_ERROR(no_successor);
GOTZ_DEFINE_ERROR(no_predecessor);
GOTZ_DEFINE_ERROR(enumeration_cap_exceeded);
GOTZ_DEFINE_ERROR(order_violation);
GOTZ_DEFINE_ERROR(empty_set);
GOTZ_DEFINE_ERROR(precondition_violation);
GOTZ_DEFINE_ERROR(internal_inconsistency);
GOTZ_DEFINE_ERROR(unsupported_dimension);
GOTZ_DEFINE_ERROR(not_found_within_cap);

#undef GOTZ_DEFINE_ERROR

class parse_error : public error
{
public:
    parse_error(const std::string &msg, std::size_t position)
        : error(msg + " (at position " + std::to_string(position) + ")"), m_position(position)
    {
    }

    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::size_t m_position;
};

} // namespace gotz

#endif
