#ifndef ROUTELAB_ERROR_HPP
#define ROUTELAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace routelab {

enum class ErrorKind {
    ParseError,
    InvariantViolation,
    BridgeRemoval,
    NonPositiveScale,
    UnknownEdge,
    ForeignTree,
    NonPositiveWeight,
    TooLarge,
    NotUnicyclic,
    NoEligibleEdge,
    InfeasibleSpec,
    UnknownCase,
    UnknownName,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace routelab

#endif  // ROUTELAB_ERROR_HPP
