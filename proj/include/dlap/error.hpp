#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dlap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument value (sizes, indices, tolerances).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A requested edge or vertex does not exist.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// The graph does not have the shape an operation requires (tree, connected).
class StructureError : public Error {
public:
    using Error::Error;
};

/// Non-finite input to a numerical routine.
class NumericError : public Error {
public:
    using Error::Error;
};

/// A closed form was requested outside its hypotheses.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree analytically did not.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class RegularityError : public Error {
public:
    RegularityError(std::size_t component, const std::string& what)
        : Error("component " + std::to_string(component) + ": " + what), component_(component) {}

    std::size_t component() const noexcept { return component_; }

private:
    std::size_t component_;
};

/// Malformed input file. Line numbers are 1-based; 0 means "not line-specific".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace dlap
