#pragma once

#include <stdexcept>
#include <string>

namespace qgi {

// Base class for every error the library raises deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operand dimensions are incompatible or an index is out of range.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

// Inversion of the zero quaternion.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// A row/column determinant was requested above the configured size cap.
class SizeCapExceeded : public Error {
public:
    explicit SizeCapExceeded(const std::string& what) : Error(what) {}
};

// An operation that requires A = A* received a non-Hermitian matrix.
class NotHermitian : public Error {
public:
    explicit NotHermitian(const std::string& what) : Error(what) {}
};

// A self-check failed: two routes that must agree produced different values.
// This always indicates a bug, never bad input.
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

// The matrix index exceeds what the requested inverse allows (e.g. a group
// or core inverse of a matrix with index >= 2).
class IndexTooLarge : public Error {
public:
    explicit IndexTooLarge(const std::string& what) : Error(what) {}
};

// Two computation methods that were asked to cross-validate disagree.
class MethodDisagreement : public Error {
public:
    explicit MethodDisagreement(const std::string& what) : Error(what) {}
};

// Rank factorization of the zero matrix.
class RankZero : public Error {
public:
    explicit RankZero(const std::string& what) : Error(what) {}
};

// Malformed textual input (JSON structure, rational syntax, ragged rows).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace qgi
