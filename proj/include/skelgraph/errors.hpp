#pragma once

#include <stdexcept>
#include <string>

namespace skelgraph {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an input file (PGM, IDX, graph JSON) is malformed. Carries
/// the byte offset at which parsing failed where one is meaningful.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t byte_offset)
        : Error(message + " (at byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    explicit ParseError(const std::string& message) : Error(message), byte_offset_(0) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

}  // namespace skelgraph
