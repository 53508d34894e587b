#pragma once

#include <stdexcept>
#include <string>

namespace projhom {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class NotIdempotent : public Error {
public:
    using Error::Error;
};

/* Raised by build_algebra when the presented quiver algebra is rejected. */
class AlgebraBuildError : public Error {
public:
    enum class Kind { NonAdmissible, NonConfluent, Infinite };

    AlgebraBuildError(Kind kind, const std::string& msg)
        : Error(msg), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/* Positioned diagnostic from the algebra file parser. */
class ParseError : public Error {
public:
    enum class Kind { Syntax, UnknownField, DanglingArrowEndpoint, NonAdmissible };

    ParseError(Kind kind, int line, int column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + msg),
          kind_(kind), line_(line), column_(column) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    Kind kind_;
    int line_;
    int column_;
};

/* Failure modes of the cokernel constructions. MonoFailure and SplitFailure
 * signal a violated global-dimension precondition; LiftFailure signals an
 * internal inconsistency and carries the offending trace. */
class TheoremError : public Error {
public:
    enum class Kind { MonoFailure, LiftFailure, SplitFailure };

    TheoremError(Kind kind, const std::string& msg, std::string trace_text = {})
        : Error(msg), kind_(kind), trace_text_(std::move(trace_text)) {}

    Kind kind() const { return kind_; }
    const std::string& trace_text() const { return trace_text_; }

private:
    Kind kind_;
    std::string trace_text_;
};

} // namespace projhom
