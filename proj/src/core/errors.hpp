#pragma once

#include <stdexcept>
#include <string>

namespace oidrd {

enum class ErrorKind {
    invalid_argument,  // malformed input: bad vertex, self-loop, bad label
    parse,             // edge-list or generator string could not be read
    cap_exceeded,      // instance above a documented size cap
    precondition,      // input violates an operation's hypothesis
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace oidrd
