#pragma once

#include <stdexcept>
#include <string>

namespace homkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error("shape mismatch: " + msg) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg) : Error("field mismatch: " + msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error("singular: " + msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg) : Error("not invertible: " + msg) {}
};

struct NotEndomorphism : Error {
    explicit NotEndomorphism(const std::string& msg) : Error("not an endomorphism: " + msg) {}
};

struct ConditionsFailed : Error {
    explicit ConditionsFailed(const std::string& msg) : Error("conditions failed: " + msg) {}
};

struct NotClosed : Error {
    explicit NotClosed(const std::string& msg) : Error("subspace not closed: " + msg) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& msg) : Error("precondition failed: " + msg) {}
};

struct FieldTooLarge : Error {
    explicit FieldTooLarge(const std::string& msg) : Error("search space too large: " + msg) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& msg) : Error("unknown name: " + msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

} // namespace homkit
