#ifndef DISTILLED_ERROR_HPP
#define DISTILLED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace distilled {

/// Raised when a caller-supplied parameter is outside an operation's domain.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal invariant (e.g. the precision budget) is violated.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool condition, const std::string& message)
{
    if (!condition)
        throw ParameterError(message);
}

} // namespace distilled

#endif // DISTILLED_ERROR_HPP
