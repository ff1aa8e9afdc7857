#pragma once

#include <stdexcept>
#include <string>

namespace cosetq {

// Base class for all library errors. The CLI maps subclasses onto exit codes:
// usage/domain/parse problems -> 2, resource limits and I/O -> 3,
// failed verifications -> 1.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands disagree on vector length / ambient dimension.
class dimension_mismatch : public error {
public:
    using error::error;
};

// Argument outside the documented domain (lambda outside [0,1], delta
// outside (0,1/2], negative weights, unknown catalog names, ...).
class domain_error : public error {
public:
    using error::error;
};

// Unknown bound-curve or suite name.
class catalog_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Work or memory would exceed a declared enumeration limit.
class resource_limit_error : public error {
public:
    using error::error;
};

// Structural precondition violated (zero code where dimension >= 1 is
// needed, generator support not covering all coordinates, ...).
class precondition_error : public error {
public:
    using error::error;
};

// An exact identity or inequality that the library promises failed to
// verify; carries the name of the offending certificate.
class certificate_error : public error {
public:
    using error::error;
};

// Malformed input file; carries a 1-based line number.
class parse_error : public error {
public:
    parse_error(int line, const std::string& msg)
        : error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace cosetq
