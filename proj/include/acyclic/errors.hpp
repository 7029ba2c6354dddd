#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acyclic {

enum class ErrorCode {
    EmptyGraph,
    NotKDegenerate,
    UnknownEdge,
    InvalidGraph,
    PropernessViolation,
    EdgeAlreadyColored,
    UncoloredEdge,
    NotACandidate,
    ImproperColoring,
    KTooSmall,
    ExtensionFailed,
    ClaimViolated,
    Exceeded,
    BadSpec,
    ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised by the colorers when no extension branch applies. The message
// carries a dump of the local state around the edge being extended.
class ExtensionFailed : public Error {
public:
    explicit ExtensionFailed(const std::string& diagnostics)
        : Error(ErrorCode::ExtensionFailed, diagnostics)
    {
    }

protected:
    ExtensionFailed(ErrorCode code, const std::string& diagnostics) : Error(code, diagnostics) {}
};

// A counting bound that the correctness argument relies on did not hold at
// runtime (e.g. more than two non-freeable colors).
class ClaimViolated : public ExtensionFailed {
public:
    explicit ClaimViolated(const std::string& diagnostics)
        : ExtensionFailed(ErrorCode::ClaimViolated, diagnostics)
    {
    }
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotKDegenerate: return "NotKDegenerate";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::PropernessViolation: return "PropernessViolation";
    case ErrorCode::EdgeAlreadyColored: return "EdgeAlreadyColored";
    case ErrorCode::UncoloredEdge: return "UncoloredEdge";
    case ErrorCode::NotACandidate: return "NotACandidate";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::ExtensionFailed: return "ExtensionFailed";
    case ErrorCode::ClaimViolated: return "ClaimViolated";
    case ErrorCode::Exceeded: return "Exceeded";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace acyclic
