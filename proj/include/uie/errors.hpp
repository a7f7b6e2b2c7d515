#pragma once

#include <stdexcept>
#include <string>

namespace uie {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when an elimination pivot falls below the singularity threshold.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

class InvalidPointCount : public Error {
public:
    using Error::Error;
};

class InvalidStep : public Error {
public:
    using Error::Error;
};

class InvalidOrder : public Error {
public:
    using Error::Error;
};

class InvalidSampleSet : public Error {
public:
    using Error::Error;
};

class InvalidRange : public Error {
public:
    using Error::Error;
};

class NonFiniteInput : public Error {
public:
    using Error::Error;
};

class FileNotFound : public Error {
public:
    using Error::Error;
};

/// Parse failure in an input file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& message, long line)
        : Error(message), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

class UnknownExperiment : public Error {
public:
    using Error::Error;
};

} // namespace uie
