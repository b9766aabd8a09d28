#pragma once

#include <stdexcept>
#include <string>

namespace psalink {

/// Machine-readable failure categories, mapped to CLI exit codes.
enum class ErrorCategory {
    config,           // invalid configuration (off-grid tone, bad range, ...)
    numeric,          // NaN/overflow detected during computation
    non_convergence,  // refinement loop exhausted without meeting tolerance
    fitting,          // no valid fit window / degenerate fit
    io,               // file read/write failure
};

const char* to_string(ErrorCategory c);
int exit_code(ErrorCategory c);

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}
    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(ErrorCategory::config, msg) {}
};

struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(ErrorCategory::numeric, msg) {}
};

struct NonConvergenceError : Error {
    explicit NonConvergenceError(const std::string& msg)
        : Error(ErrorCategory::non_convergence, msg) {}
};

struct FittingError : Error {
    explicit FittingError(const std::string& msg) : Error(ErrorCategory::fitting, msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(ErrorCategory::io, msg) {}
};

}  // namespace psalink
