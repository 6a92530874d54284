#pragma once

#include <stdexcept>
#include <string>

namespace tsrd {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    SizeMismatch,
    InvalidLabel,
    IsolatedVertexInGraph,
    InstanceTooLarge,
    InvalidFamilyParams,
    NoClosedForm,
    StarInput,
    TooSmall,
    WrongDiameter,
    MinDegreeTooSmall,
    AcyclicInput,
    GirthTooSmall,
    NotDominatingSet,
    NotTotalDominatingSet,
    NotATree,
    CertificateFailure,
    MalformedGraph6,
    ParseError,
};

const char* to_string(ErrorCode code);

// Domain error carrying a stable code so callers can branch on the cause.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tsrd
