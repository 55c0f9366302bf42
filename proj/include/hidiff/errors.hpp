#pragma once

#include <stdexcept>
#include <string>

namespace hidiff {

// Every failure the engine can raise carries a stable machine-readable code.
// The CLI prints "<code>: <message>" on one line and exits non-zero.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& msg) : Error("shape_error", msg) {}
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& msg) : Error("invalid_spec", msg) {}
};

struct MissingParameter : Error {
    explicit MissingParameter(const std::string& msg) : Error("missing_parameter", msg) {}
};

struct PlanError : Error {
    explicit PlanError(const std::string& msg) : Error("plan_error", msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error("io_error", msg) {}
};

} // namespace hidiff
