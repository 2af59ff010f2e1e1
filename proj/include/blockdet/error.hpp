#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockdet {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset` is the byte offset of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An operation was called on an input violating its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace blockdet
