#pragma once

#include <stdexcept>
#include <string>

namespace zplat {

// Stable numeric codes shared with the C API (see include/zplat.h).
enum class Status : int {
    ok = 0,
    syntax_error = 1,
    validation_error = 2,
    version_error = 3,
    bad_level = 4,
    cap_exceeded = 5,
    unsupported = 6,
    bad_argument = 7,
    inconsistent = 8,
    internal_error = 9,
};

class Error : public std::runtime_error {
public:
    Error(Status code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Status code() const { return code_; }

private:
    Status code_;
};

struct SyntaxError : Error {
    explicit SyntaxError(const std::string& w) : Error(Status::syntax_error, w) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string& w) : Error(Status::validation_error, w) {}
};
struct VersionError : Error {
    explicit VersionError(const std::string& w) : Error(Status::version_error, w) {}
};
struct BadLevelError : Error {
    explicit BadLevelError(const std::string& w) : Error(Status::bad_level, w) {}
};
struct CapExceededError : Error {
    explicit CapExceededError(const std::string& w) : Error(Status::cap_exceeded, w) {}
};
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& w) : Error(Status::unsupported, w) {}
};
struct BadArgumentError : Error {
    explicit BadArgumentError(const std::string& w) : Error(Status::bad_argument, w) {}
};
struct InconsistentError : Error {
    explicit InconsistentError(const std::string& w) : Error(Status::inconsistent, w) {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error(Status::internal_error, w) {}
};

}  // namespace zplat
