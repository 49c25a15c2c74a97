#pragma once

#include <stdexcept>
#include <string>

namespace tabkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tableau validation failures.
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};
struct NotIncreasing : Error {
    explicit NotIncreasing(const std::string& msg) : Error(msg) {}
};
struct MissingValue : Error {
    explicit MissingValue(const std::string& msg) : Error(msg) {}
};

// Preconditions on specific families.
struct NotStandard : Error {
    explicit NotStandard(const std::string& msg) : Error(msg) {}
};
struct NotHook : Error {
    explicit NotHook(const std::string& msg) : Error(msg) {}
};
struct AlreadyStandard : Error {
    explicit AlreadyStandard(const std::string& msg) : Error(msg) {}
};
struct NotSmall : Error {
    explicit NotSmall(const std::string& msg) : Error(msg) {}
};
struct NotFixed : Error {
    explicit NotFixed(const std::string& msg) : Error(msg) {}
};

// Parameter and arithmetic failures.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};
struct ActionOrderMismatch : Error {
    explicit ActionOrderMismatch(const std::string& msg) : Error(msg) {}
};
struct DivisionNotExact : Error {
    explicit DivisionNotExact(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace tabkit
