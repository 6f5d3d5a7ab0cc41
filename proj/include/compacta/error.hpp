#pragma once

#include <stdexcept>
#include <string>

namespace compacta {

// Categories map to CLI exit codes: Usage -> 2, Numeric -> 3.
// Falsification events are not errors; they live in reports.
enum class ErrorKind { Usage, Numeric };

class Error : public std::runtime_error {
public:
    Error(std::string code, std::string what, ErrorKind kind)
        : std::runtime_error(code + ": " + what), code_(std::move(code)), kind_(kind) {}

    const std::string& code() const noexcept { return code_; }
    ErrorKind kind() const noexcept { return kind_; }

private:
    std::string code_;
    ErrorKind kind_;
};

[[noreturn]] inline void fail(const char* code, const std::string& what,
                              ErrorKind kind = ErrorKind::Usage) {
    throw Error(code, what, kind);
}

[[noreturn]] inline void fail_numeric(const char* code, const std::string& what) {
    throw Error(code, what, ErrorKind::Numeric);
}

}  // namespace compacta
