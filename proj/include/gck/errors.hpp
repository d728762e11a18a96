#pragma once

#include <stdexcept>
#include <string>

namespace gck {

// Base for all library errors. `code()` is a stable machine-readable slug
// (e.g. "closure-exceeds-limit"); `what()` carries the human explanation.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Invalid input: bad descriptor, malformed length, wrong group, etc.
// The CLI maps these to exit code 1.
class DomainError : public Error {
public:
    using Error::Error;
};

// The library caught itself in an inconsistent state: two routes that must
// agree disagreed, a table failed its own orthogonality. Exit code 2.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace gck
