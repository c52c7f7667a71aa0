#pragma once

#include <stdexcept>
#include <string>

namespace subdiv {

/// Violated precondition or mathematically undefined request (z = 0, width < 2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Lookup of a name that is not registered (catalog schemes).
class NotFoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Malformed scheme file or rational literal. Carries the offending field and line when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string field = {}, int line = 0)
        : std::runtime_error(what), field_(std::move(field)), line_(line) {}

    const std::string& field() const noexcept { return field_; }
    int line() const noexcept { return line_; }

private:
    std::string field_;
    int line_;
};

/// Eigensolver did not converge or produced an eigenvalue failing its residual check.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap (refined point count, grid cell count) would be exceeded.
class ResourceLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace subdiv
