#pragma once

#include <stdexcept>
#include <string>

namespace hlat {

// Error categories, chosen so that callers (in particular the CLI) can map
// failures to stable exit codes without string matching.
enum class ErrorKind {
    invalid_input,    // malformed or inconsistent user input
    budget_exceeded,  // enumeration node budget exhausted
    certificate,      // a requested certificate could not be established
    internal,         // broken invariant inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error invalid_input(std::string message) {
    return Error(ErrorKind::invalid_input, std::move(message));
}

inline Error budget_exceeded(std::string message) {
    return Error(ErrorKind::budget_exceeded, std::move(message));
}

inline Error certificate_failure(std::string message) {
    return Error(ErrorKind::certificate, std::move(message));
}

inline Error internal_error(std::string message) {
    return Error(ErrorKind::internal, std::move(message));
}

}  // namespace hlat
