#pragma once

#include <stdexcept>
#include <string>

namespace elacnn {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller violated a documented precondition (shape mismatch, bad range, ...).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

/// Image encode/decode failure.
class CodecError : public Error {
public:
    explicit CodecError(const std::string& msg) : Error(msg) {}
};

/// Dataset directory scan failure (missing root, no usable images).
class IngestionError : public Error {
public:
    explicit IngestionError(const std::string& msg) : Error(msg) {}
};

/// Train/validation split cannot be formed (a class is too small).
class SplitError : public IngestionError {
public:
    explicit SplitError(const std::string& msg) : IngestionError(msg) {}
};

/// Training run failed.
class TrainingError : public Error {
public:
    explicit TrainingError(const std::string& msg) : Error(msg) {}
};

/// Model archive read/write failure. `kind()` distinguishes the causes the
/// CLI and tests care about.
class ArchiveError : public Error {
public:
    enum class Kind { io, bad_magic, truncated, bad_header, arch_mismatch };

    ArchiveError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

}  // namespace elacnn
