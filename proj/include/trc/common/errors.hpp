// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trc {

// Every recoverable failure in the library is reported as a trc::Error
// carrying one of these codes. Outcomes that are part of a protocol
// (share verification results, block rejection, dispute rulings) are values,
// not errors.
enum class Errc {
    // group backend
    NonGenerator,
    UnsupportedCurve,
    ToyGroupTooLarge,
    MalformedEncoding,
    // protocol
    InvalidArgument,
    ThresholdOutOfRange,
    DuplicateHolderKey,
    IndexOutOfRange,
    DuplicateX,
    NotEnoughShares,
    InvalidShareIncluded,
    AuthenticationFailed,
    // ledger
    InsufficientDeposit,
    BadPossessionProof,
    DuplicateKey,
    MalformedRequest,
    InsufficientFee,
    UnknownRequest,
    UnknownHolder,
    RequestClosed,
    DuplicateSubmission,
    NotProvisional,
    UnknownSubmission,
    InactiveHolder,
    NotReady,
    ReplayMismatch,
    // agents
    ConfigInvalid,
    EmptyReport,
    // voting
    ParseError,
    DuplicateAlternativeInBallot,
    EmptyProfile,
    BadPercent,
    // io
    IoError,
};

std::string_view to_string(Errc code) noexcept;
std::optional<Errc> errc_from_string(std::string_view name) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace trc
