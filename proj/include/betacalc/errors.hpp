#pragma once

#include <stdexcept>
#include <string>

namespace betacalc {

/// Base class for all betacalc errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- domain / input errors ---------------------------------------------------

class InvalidInterval : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class DepthExceeded : public Error {
public:
    using Error::Error;
};

class LatticeMismatch : public Error {
public:
    using Error::Error;
};

class InvalidExponent : public Error {
public:
    using Error::Error;
};

class DegenerateBC : public Error {
public:
    using Error::Error;
};

class RealityViolation : public Error {
public:
    using Error::Error;
};

// -- numerical failures ------------------------------------------------------

class NonFiniteSample : public Error {
public:
    using Error::Error;
};

class NonFiniteValue : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class SeriesDivergence : public Error {
public:
    using Error::Error;
};

class TruncationCap : public Error {
public:
    using Error::Error;
};

class PoleEncountered : public Error {
public:
    using Error::Error;
};

class EigenNoConvergence : public Error {
public:
    using Error::Error;
};

// -- configuration -----------------------------------------------------------

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace betacalc
