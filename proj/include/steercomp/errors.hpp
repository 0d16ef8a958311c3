#pragma once

#include <stdexcept>
#include <string>

namespace steercomp {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid or inconsistent configuration (CLI maps this to exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Vehicle left the reference path; the run is aborted and reported as a
// divergence (CLI maps this to exit code 3).
class OffPathError : public Error {
public:
    using Error::Error;
};

class SpeedTooLowError : public Error {
public:
    using Error::Error;
};

class DegenerateDataError : public Error {
public:
    using Error::Error;
};

class NumericalFailureError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class MissingChannelError : public Error {
public:
    using Error::Error;
};

class DivergedError : public Error {
public:
    using Error::Error;
};

class ArchMismatchError : public Error {
public:
    using Error::Error;
};

class ZeroVarianceError : public Error {
public:
    using Error::Error;
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

class SeriesTooShortError : public Error {
public:
    using Error::Error;
};

class NonFiniteInputError : public Error {
public:
    using Error::Error;
};

}  // namespace steercomp
