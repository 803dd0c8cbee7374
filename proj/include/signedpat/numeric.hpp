#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace signedpat {

/// Arbitrary precision integer used for every count.
using BigInt = boost::multiprecision::cpp_int;
/// Exact rational (normalized, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

/// Base for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad pattern, sign out of range, arity mismatch.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A search or enumeration bound was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a formula or series operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class SingularDivisionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// n!·[x^n] of an EGF was not an integer.
class IntegralityError : public Error {
public:
    using Error::Error;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
/// base^exp with 0^0 = 1.
BigInt power(long long base, unsigned exp);

} // namespace signedpat
