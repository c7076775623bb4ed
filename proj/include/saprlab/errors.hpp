#pragma once

#include <stdexcept>
#include <string>

namespace saprlab {

// Bad user-supplied parameter (CLI maps this to exit code 1).
class ParameterError : public std::runtime_error {
public:
    explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

// Bad input data: unreadable files, disconnected graphs, incomplete route
// tables and the like (CLI exit code 2).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure; carries the 1-based line number of the offending line.
class ParseError : public DataError {
public:
    ParseError(const std::string& what, long line)
        : DataError(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    long line() const { return line_; }

private:
    long line_;
};

// A broken invariant inside the library itself, e.g. an antecedent chain that
// does not reach its source or a path count driven below zero.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace saprlab
