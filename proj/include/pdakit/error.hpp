#pragma once

#include <stdexcept>
#include <string>

namespace pdakit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ragged or otherwise malformed grid handed to a constructor.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Text input that does not follow the PDA file format.
class ParseError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Arguments outside an operation's admissible range.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A wide-integer computation that does not fit the target type.
class OverflowError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A user could not rebuild its file from cache and signals.
class DecodeError : public Error {
public:
    using Error::Error;
};

}  // namespace pdakit
