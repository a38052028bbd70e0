#pragma once

#include <stdexcept>
#include <string>

namespace qchow {

// Any failure that invalidates a computed class rather than a verdict.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VarsetMismatch : public IntegrityError {
public:
    VarsetMismatch() : IntegrityError("operands live in different variable sets") {}
};

class NotDivisible : public IntegrityError {
public:
    using IntegrityError::IntegrityError;
};

class ResidualDenominator : public IntegrityError {
public:
    using IntegrityError::IntegrityError;
};

class NotSymmetric : public IntegrityError {
public:
    using IntegrityError::IntegrityError;
};

class InfiniteColength : public IntegrityError {
public:
    using IntegrityError::IntegrityError;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qchow
