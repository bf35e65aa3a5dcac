#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Exit-code relevant error classes; the CLI maps these to distinct codes.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A computed fact contradicted an algebraic identity that must hold.
// Reaching this is a bug in the library, never a user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace hecke
