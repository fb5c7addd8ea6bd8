#pragma once

#include <stdexcept>
#include <string>

namespace lindsq {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimension mismatch or unrepresentable result size.
class shape_error : public error {
public:
    using error::error;
};

/// Model parameters violate a required inequality.
class validation_error : public error {
public:
    using error::error;
};

/// State parameter too large for the requested truncation.
class range_error : public error {
public:
    using error::error;
};

/// A documented precondition was violated by the caller.
class contract_error : public error {
public:
    using error::error;
};

/// Overflow, non-finite values, or a failed internal consistency check.
class numeric_error : public error {
public:
    using error::error;
};

/// Disentangling factor F too close to zero (factorization breaks down).
class singular_error : public error {
public:
    using error::error;
};

/// File could not be read or written.
class io_error : public error {
public:
    using error::error;
};

}  // namespace lindsq
