#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace codetops {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeError : Error {
    uint64_t p;
    explicit NonPrimeError(uint64_t p_)
        : Error("p = " + std::to_string(p_) + " is not prime"), p(p_) {}
};

struct ReducibleModulusError : Error {
    using Error::Error;
};

struct NoBuiltinModulusError : Error {
    uint64_t q;
    explicit NoBuiltinModulusError(uint64_t q_)
        : Error("no built-in modulus for q = " + std::to_string(q_) +
                "; supply one explicitly"),
          q(q_) {}
};

struct FieldMismatchError : Error {
    FieldMismatchError() : Error("operands belong to different fields") {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero field element") {}
};

struct SizeMismatchError : Error {
    using Error::Error;
};

struct AmbientMismatchError : Error {
    using Error::Error;
};

struct DimMismatchError : Error {
    using Error::Error;
};

struct BadDimensionError : Error {
    using Error::Error;
};

struct NotIncidentError : Error {
    using Error::Error;
};

// A requested computation exceeds a configured feasibility cap.
struct TooLargeError : Error {
    uint64_t count;
    uint64_t cap;
    TooLargeError(const std::string& what_, uint64_t count_, uint64_t cap_)
        : Error(what_ + ": size " + std::to_string(count_) +
                " exceeds cap " + std::to_string(cap_)),
          count(count_), cap(cap_) {}
};

struct ZeroColumnError : Error {
    size_t column;
    explicit ZeroColumnError(size_t col)
        : Error("column " + std::to_string(col + 1) + " is zero"), column(col) {}
};

struct RankDeficientError : Error {
    using Error::Error;
};

struct ZeroWError : Error {
    ZeroWError() : Error("w must be a non-zero vector") {}
};

struct ProportionalToColumnError : Error {
    size_t column;
    explicit ProportionalToColumnError(size_t col)
        : Error("w is proportional to column " + std::to_string(col + 1)),
          column(col) {}
};

struct EmptyWPrimeError : Error {
    EmptyWPrimeError() : Error("no admissible vectors: W' is empty") {}
};

struct NotInStabilizerError : Error {
    NotInStabilizerError() : Error("map does not stabilize the subspace") {}
};

struct UnknownVertexError : Error {
    using Error::Error;
};

struct ParseError : Error {
    size_t line;    // 1-based, 0 when not tied to a location
    size_t column;  // 1-based character offset within the line
    ParseError(size_t line_, size_t column_, const std::string& msg)
        : Error(line_ == 0 ? msg
                           : "line " + std::to_string(line_) + ", column " +
                                 std::to_string(column_) + ": " + msg),
          line(line_), column(column_) {}
};

}  // namespace codetops
