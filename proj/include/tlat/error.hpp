#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tlat {

/// Domain-level failure with a stable machine-readable code.  The CLI maps
/// these to an error JSON object and exit status 1; library callers can
/// branch on code() without parsing the message.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

inline void require(bool condition, const char* code, const std::string& message) {
    if (!condition) throw DomainError(code, message);
}

}  // namespace tlat
