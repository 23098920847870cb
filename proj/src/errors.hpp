#pragma once

#include <stdexcept>
#include <string>

namespace bsl {

// Stable error categories; the C API and the CLI exit codes key off these.
enum class ErrorCode {
    Invalid = 1,
    Io = 2,
    Aliasing = 3,
    Degenerate = 4,
    Shape = 5,
    Divergence = 6,
    Internal = 7,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& w) : Error(ErrorCode::Invalid, w) {}
};

struct IoError : Error {
    explicit IoError(const std::string& w) : Error(ErrorCode::Io, w) {}
};

struct SamplingError : Error {
    explicit SamplingError(const std::string& w) : Error(ErrorCode::Invalid, w) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& w) : Error(ErrorCode::Shape, w) {}
};

struct AliasingError : Error {
    explicit AliasingError(const std::string& w) : Error(ErrorCode::Aliasing, w) {}
};

struct DegenerateWindowError : Error {
    explicit DegenerateWindowError(const std::string& w) : Error(ErrorCode::Degenerate, w) {}
};

struct DegenerateReportError : Error {
    explicit DegenerateReportError(const std::string& w) : Error(ErrorCode::Degenerate, w) {}
};

struct DivergenceError : Error {
    explicit DivergenceError(const std::string& w) : Error(ErrorCode::Divergence, w) {}
};

}  // namespace bsl
