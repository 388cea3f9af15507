#pragma once

#include <stdexcept>
#include <string>

namespace ltw {

// Malformed input file or instance text.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates an operation's precondition
// (e.g. a reduction applied outside its domain).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ltw
