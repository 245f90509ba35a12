#ifndef PCW_ERRORS_HPP
#define PCW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcw {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched vector/matrix shapes.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Input outside the mathematical domain of an operation
// (negative multiplicities, vector not in the cone, missing structure, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A configurable desk-scale bound would be exceeded.  The message names the
// bound and how to raise it.
struct CapacityError : Error {
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// Malformed input file; line is 1-based.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

// An internal invariant failed.  Carries a dump of the offending state so the
// failure is diagnosable from the message alone.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace pcw

#endif
