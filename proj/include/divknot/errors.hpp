#ifndef DIVKNOT_ERRORS_HPP
#define DIVKNOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divknot {

/// Rejected input: malformed or unrealizable divide data.
class ValidationError : public std::runtime_error {
public:
    enum class Kind { Syntax, EmptyName, OddOccurrence, SignMismatch, Planarity, UnknownRegion, Colouring };

    ValidationError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A computed object failed an internal consistency check.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace divknot

#endif  // DIVKNOT_ERRORS_HPP
