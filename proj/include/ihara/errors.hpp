#pragma once

#include <stdexcept>
#include <string>

namespace ihara {

// Error taxonomy mirrors the CLI exit-code contract: parse failures,
// I/O failures, bad distributions and out-of-window parameters are
// distinguishable by type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct DistributionError : Error {
    explicit DistributionError(const std::string& msg) : Error(msg) {}
};

struct WindowError : Error {
    explicit WindowError(const std::string& msg) : Error(msg) {}
};

struct ResourceGuardError : Error {
    explicit ResourceGuardError(const std::string& msg) : Error(msg) {}
};

// Internal errors: things the math says cannot happen (no sign change for a
// root that provably exists, route disagreement, ...). Reported, never hidden.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace ihara
