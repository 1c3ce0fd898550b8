#pragma once

#include <stdexcept>
#include <string>

namespace geopc {

// Process exit codes shared by the CLI and the test harness.
enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 2,
    exit_io = 3,
    exit_internal = 4,
};

// Bad arguments, out-of-range parameters, malformed configs.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem failures. Messages always carry the offending path.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file content; carries the path and 1-based line number.
class ParseError : public IoError {
public:
    ParseError(const std::string& path, long line, const std::string& msg)
        : IoError(path + ":" + std::to_string(line) + ": " + msg),
          line_number(line) {}
    long line_number;
};

// A broken internal invariant: a bug, not bad input.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace geopc
