// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/common/errors.hpp"

namespace trc {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NonGenerator: return "NonGenerator";
        case Errc::UnsupportedCurve: return "UnsupportedCurve";
        case Errc::ToyGroupTooLarge: return "ToyGroupTooLarge";
        case Errc::MalformedEncoding: return "MalformedEncoding";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ThresholdOutOfRange: return "ThresholdOutOfRange";
        case Errc::DuplicateHolderKey: return "DuplicateHolderKey";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::DuplicateX: return "DuplicateX";
        case Errc::NotEnoughShares: return "NotEnoughShares";
        case Errc::InvalidShareIncluded: return "InvalidShareIncluded";
        case Errc::AuthenticationFailed: return "AuthenticationFailed";
        case Errc::InsufficientDeposit: return "InsufficientDeposit";
        case Errc::BadPossessionProof: return "BadPossessionProof";
        case Errc::DuplicateKey: return "DuplicateKey";
        case Errc::MalformedRequest: return "MalformedRequest";
        case Errc::InsufficientFee: return "InsufficientFee";
        case Errc::UnknownRequest: return "UnknownRequest";
        case Errc::UnknownHolder: return "UnknownHolder";
        case Errc::RequestClosed: return "RequestClosed";
        case Errc::DuplicateSubmission: return "DuplicateSubmission";
        case Errc::NotProvisional: return "NotProvisional";
        case Errc::UnknownSubmission: return "UnknownSubmission";
        case Errc::InactiveHolder: return "InactiveHolder";
        case Errc::NotReady: return "NotReady";
        case Errc::ReplayMismatch: return "ReplayMismatch";
        case Errc::ConfigInvalid: return "ConfigInvalid";
        case Errc::EmptyReport: return "EmptyReport";
        case Errc::ParseError: return "ParseError";
        case Errc::DuplicateAlternativeInBallot: return "DuplicateAlternativeInBallot";
        case Errc::EmptyProfile: return "EmptyProfile";
        case Errc::BadPercent: return "BadPercent";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

std::optional<Errc> errc_from_string(std::string_view name) noexcept {
    for (int i = 0; i <= static_cast<int>(Errc::IoError); ++i)
        if (to_string(static_cast<Errc>(i)) == name) return static_cast<Errc>(i);
    return std::nullopt;
}

}  // namespace trc
