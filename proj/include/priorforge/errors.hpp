#pragma once

#include <stdexcept>

namespace priorforge {

/// Base class for every rejected input. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Structural problem with an information structure that has no more
/// specific category (missing type, duplicate label, empty player list).
class StructureError : public Error {
public:
    using Error::Error;
};

class PartitionError : public StructureError {
public:
    using StructureError::StructureError;
};

class SupportError : public StructureError {
public:
    using StructureError::StructureError;
};

class InconsistencyError : public StructureError {
public:
    using StructureError::StructureError;
};

class StochasticityError : public StructureError {
public:
    using StructureError::StructureError;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class NotAComponentError : public Error {
public:
    using Error::Error;
};

class EmptySetError : public Error {
public:
    using Error::Error;
};

class PlayerCountError : public Error {
public:
    using Error::Error;
};

class SizeCapError : public Error {
public:
    using Error::Error;
};

class MalformedProgramError : public Error {
public:
    using Error::Error;
};

/// A certificate produced internally failed exact re-checking. Always a bug;
/// the CLI maps it to exit code 4. Not an Error: it never signals bad input.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace priorforge
