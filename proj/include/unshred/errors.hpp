#pragma once

#include <stdexcept>
#include <string>

namespace unshred {

// Base for all library errors so callers can catch the whole family.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments or inputs that violate a documented precondition.
struct InvalidInput : Error {
    using Error::Error;
};

enum class PngErrorKind { missing_file, malformed, unsupported_depth, write_failure };

struct PngError : Error {
    PngError(PngErrorKind kind, const std::string& what) : Error(what), kind(kind) {}
    PngErrorKind kind;
};

enum class ModelIoErrorKind { missing_file, bad_magic, bad_version, malformed, checksum_mismatch };

struct ModelIoError : Error {
    ModelIoError(ModelIoErrorKind kind, const std::string& what) : Error(what), kind(kind) {}
    ModelIoErrorKind kind;
};

}  // namespace unshred
