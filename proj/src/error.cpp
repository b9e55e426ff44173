#include "isolab/error.hpp"

namespace isolab {

std::string_view errc_name(Errc code)
{
    switch (code) {
    case Errc::NonInvolutiveTwin: return "NonInvolutiveTwin";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::BadInput: return "BadInput";
    case Errc::TouchesTruncationBoundary: return "TouchesTruncationBoundary";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotInterior: return "NotInterior";
    case Errc::AssumptionViolated: return "AssumptionViolated";
    case Errc::EmptySet: return "EmptySet";
    case Errc::RadiusExceedsInterior: return "RadiusExceedsInterior";
    case Errc::PreconditionNotMet: return "PreconditionNotMet";
    case Errc::EmptyFaceSet: return "EmptyFaceSet";
    case Errc::NotSimplyConnected: return "NotSimplyConnected";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::Disconnected: return "Disconnected";
    case Errc::BallTouchesTruncationBoundary: return "BallTouchesTruncationBoundary";
    case Errc::NoDetourExists: return "NoDetourExists";
    case Errc::NotTriangulation: return "NotTriangulation";
    case Errc::TooSmallT: return "TooSmallT";
    case Errc::ScheduleTooLargeForRadius: return "ScheduleTooLargeForRadius";
    case Errc::SpacingViolated: return "SpacingViolated";
    case Errc::RuleViolated: return "RuleViolated";
    case Errc::BadFlags: return "BadFlags";
    case Errc::FileIO: return "FileIO";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

} // namespace isolab
