#ifndef ROBIN_ERRORS_HPP_
#define ROBIN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace robin {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (GML or edge list). Carries a 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An edge refers to a node id that was never declared.
class ReferenceError : public Error {
public:
    ReferenceError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An external detector process failed. Carries whatever the child wrote to stderr.
class DetectorError : public Error {
public:
    DetectorError(const std::string& what, std::string child_stderr)
        : Error(what), child_stderr_(std::move(child_stderr)) {}

    const std::string& child_stderr() const noexcept { return child_stderr_; }

private:
    std::string child_stderr_;
};

/// Numerical failure (e.g. a covariance matrix that is not positive definite).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

}  // namespace robin

#endif  // ROBIN_ERRORS_HPP_
