#pragma once

#include <stdexcept>
#include <string>

namespace scoreseq {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable text, unsorted strict sequences, broken matrix invariants.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A score condition or a realizer precondition does not hold.
class ConditionViolation : public Error {
public:
    using Error::Error;
};

class NonIntegral : public Error {
public:
    using Error::Error;
};

/// Input is larger than a configured search or memory cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// A search that is guaranteed to succeed ran out of candidates.
class SearchExhausted : public Error {
public:
    using Error::Error;
};

/// A postcondition that the construction guarantees was found violated.
class InternalError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class EmptyInterval : public Error {
public:
    using Error::Error;
};

}  // namespace scoreseq
