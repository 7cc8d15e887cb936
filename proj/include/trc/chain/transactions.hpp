// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "trc/common/errors.hpp"
#include "trc/core/codec.hpp"
#include "trc/core/protocol.hpp"

namespace trc::chain {

using core::Json;

struct RegisterHolder {
    group::G1Element pk;
    std::int64_t deposit = 0;
    group::G2Element possession_proof;
};

// reference_now is the true time at which the proposer broadcast the block.
// Proposer 0 stands for a validator outside the holder set.
struct AdvanceBlock {
    std::uint32_t proposer = 0;
    std::int64_t claimed_timestamp = 0;
    std::int64_t reference_now = 0;
};

struct PostRequest {
    core::TimelockRequest request;
    std::int64_t fee = 0;
};

struct SubmitShare {
    std::uint32_t holder_index = 0;
    std::string request_id;
    core::SecretShare share;
};

struct RaiseDispute {
    std::uint32_t challenger = 0;
    std::uint64_t submission_id = 0;
};

struct FinalizeRequest {
    std::string request_id;
};

using Transaction = std::variant<RegisterHolder, AdvanceBlock, PostRequest, SubmitShare, RaiseDispute, FinalizeRequest>;

std::string_view kind(const Transaction& tx);

Json to_json(const Transaction& tx);
Transaction transaction_from_json(const group::Group& group, const Json& j);

struct Receipt {
    std::uint64_t seq = 0;
    bool ok = true;
    Errc error = Errc::InvalidArgument;  // meaningful only when !ok
    std::string detail;
    Json result = Json::object();

    friend bool operator==(const Receipt&, const Receipt&) = default;
};

Json to_json(const Receipt& r);
Receipt receipt_from_json(const Json& j);

}  // namespace trc::chain
