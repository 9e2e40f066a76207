#pragma once

#include <stdexcept>
#include <string>

namespace oddtrails {

enum class Err {
    SameVertex,
    LoopWouldForm,
    InsufficientConnectivity,
    ConnectivityTooLow,
    BadPosition,
    EndpointMismatch,
    EdgeOverlap,
    RepeatedEdge,
    NotAPath,
    EndpointsNotInA,
    EmptyTrail,
    InvalidTriple,
    BudgetExceeded,
    BadParameter,
    ClassificationFailure,
    WitnessInvalid,
    IterationBoundExceeded,
    OverlappingTerminalSets,
    LiftFailed,
    InvalidInput,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::SameVertex: return "SameVertex";
        case Err::LoopWouldForm: return "LoopWouldForm";
        case Err::InsufficientConnectivity: return "InsufficientConnectivity";
        case Err::ConnectivityTooLow: return "ConnectivityTooLow";
        case Err::BadPosition: return "BadPosition";
        case Err::EndpointMismatch: return "EndpointMismatch";
        case Err::EdgeOverlap: return "EdgeOverlap";
        case Err::RepeatedEdge: return "RepeatedEdge";
        case Err::NotAPath: return "NotAPath";
        case Err::EndpointsNotInA: return "EndpointsNotInA";
        case Err::EmptyTrail: return "EmptyTrail";
        case Err::InvalidTriple: return "InvalidTriple";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::BadParameter: return "BadParameter";
        case Err::ClassificationFailure: return "ClassificationFailure";
        case Err::WitnessInvalid: return "WitnessInvalid";
        case Err::IterationBoundExceeded: return "IterationBoundExceeded";
        case Err::OverlappingTerminalSets: return "OverlappingTerminalSets";
        case Err::LiftFailed: return "LiftFailed";
        case Err::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Err code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace oddtrails
