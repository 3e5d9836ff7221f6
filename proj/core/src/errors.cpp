#include "linperiod/errors.hpp"

namespace linperiod {

namespace {

std::string with_line(std::size_t line, const std::string& what)
{
    if (line == 0)
        return what;
    return "line " + std::to_string(line) + ": " + what;
}

} // namespace

OrderMismatch::OrderMismatch(std::size_t lhs, std::size_t rhs)
    : std::logic_error("series order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
{
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(with_line(line, what)), line_(line)
{
}

ValidationError::ValidationError(std::size_t line, const std::string& what)
    : std::runtime_error(with_line(line, what)), line_(line)
{
}

} // namespace linperiod
