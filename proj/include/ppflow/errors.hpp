#pragma once

#include <stdexcept>
#include <string>

namespace ppflow {

/// Malformed input text or file (CLI exit code 2).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its contract (CLI exit code 3).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Some job requires more storage than the capacity provides; no feasible
/// schedule exists at all.
class CapacityError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The auxiliary-job extension is undefined when every first-stage or every
/// second-stage duration is zero; callers must take the trivial path instead.
class DegenerateInstanceError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Instance exceeds an exhaustive-search limit (CLI exit code 5).
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal invariant breach. Indicates a bug in this library, not bad input.
class DefectError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ppflow
