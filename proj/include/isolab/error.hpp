#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isolab {

enum class Errc {
    NonInvolutiveTwin,
    DisconnectedGraph,
    EulerViolation,
    BadInput,
    TouchesTruncationBoundary,
    CapExceeded,
    NotInterior,
    AssumptionViolated,
    EmptySet,
    RadiusExceedsInterior,
    PreconditionNotMet,
    EmptyFaceSet,
    NotSimplyConnected,
    HypothesisFailed,
    Disconnected,
    BallTouchesTruncationBoundary,
    NoDetourExists,
    NotTriangulation,
    TooSmallT,
    ScheduleTooLargeForRadius,
    SpacingViolated,
    RuleViolated,
    BadFlags,
    FileIO,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace isolab
