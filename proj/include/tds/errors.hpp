#pragma once

#include <stdexcept>
#include <string>

namespace tds {

/// Invalid argument or violated precondition.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lookup of a key that does not exist (e.g. an unknown sample id).
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An estimator was evaluated where no observations exist.
class NoDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries a 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    long line() const { return line_; }

private:
    long line_ = 0;
};

/// Filesystem-level failure (open/read/write).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tds
