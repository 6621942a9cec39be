#pragma once

#include <stdexcept>
#include <string>

namespace cpk {

// Library error with a stable machine-readable code ("nonpositive-entry",
// "not-tangent", ...) alongside the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

} // namespace cpk
