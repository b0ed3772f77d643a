#pragma once

#include <stdexcept>
#include <string>

namespace qam {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid interval or a domain incompatible with a generator family.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A function failed the membership requirements for a generator
// (vanishing or sign-changing first derivative).
class NotAGeneratorError : public Error {
public:
    explicit NotAGeneratorError(const std::string& what) : Error(what) {}
};

// Expression text could not be parsed; carries the offset of the offending
// character in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A computation produced a non-finite intermediate value.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(what) {}
};

}  // namespace qam
