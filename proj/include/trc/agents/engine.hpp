// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trc/agents/config.hpp"
#include "trc/chain/ledger.hpp"
#include "trc/core/keys.hpp"

namespace trc::agents {

struct RequestOutcome {
    std::string request_id;
    std::int64_t duration_s = 0;
    std::int64_t posted_time = 0;
    std::int64_t requested_time = 0;  // decrypt_time
    std::optional<std::int64_t> reveal_time;
    std::optional<std::int64_t> reveal_reference_time;
    std::optional<double> deviation_s;  // reveal_time - requested_time
    std::optional<double> decrypt_time_s;  // true time the first honest holder recovered m
    bool reconstructed = false;
    chain::RequestStatus status = chain::RequestStatus::open;
};

struct SlashEvent {
    std::uint32_t holder = 0;
    std::string request_id;
    std::int64_t block_time = 0;
    std::string reason;  // "early" or "invalid_share"
};

struct DisputeEvent {
    std::uint32_t challenger = 0;
    std::uint64_t submission_id = 0;
    std::uint32_t accused = 0;
    chain::DisputeOutcome outcome = chain::DisputeOutcome::Dismissed;
};

struct HolderSummary {
    std::uint32_t index = 0;
    Behavior behavior = Behavior::honest;
    chain::HolderStatus status = chain::HolderStatus::active;
    std::int64_t rewards = 0;
    double clock_offset_s = 0;
    std::uint64_t verifications = 0;
    // Verifications performed before reconstruction, summed over requests.
    std::uint64_t verifications_to_reconstruct = 0;
    std::uint32_t reconstructions = 0;
};

struct ScenarioReport {
    std::string name;
    std::uint64_t seed = 0;
    std::uint32_t n = 0;
    std::uint32_t threshold = 0;
    std::vector<RequestOutcome> requests;
    std::vector<SlashEvent> slashes;
    std::vector<DisputeEvent> disputes;
    std::vector<HolderSummary> holders;
    std::uint64_t blocks = 0;
    std::uint64_t rejected_blocks = 0;
    std::uint64_t failed_transactions = 0;
    bool conserved = true;
    std::string state_hash;
};

Json to_json(const ScenarioReport& r);

struct ScenarioRun {
    ScenarioReport report;
    std::string ledger_log;  // JSON lines, see chain::Ledger::export_log
};

ScenarioRun run_scenario_with_log(const ScenarioConfig& config, std::uint64_t seed);
ScenarioReport run_scenario(const ScenarioConfig& config, std::uint64_t seed);

// What an adversarial holder sends after seeing `view` at its local time.
// `request` must already be posted. Honest behavior is rejected.
struct HolderAgent {
    core::KeyPair keys;
    Behavior behavior = Behavior::honest;
    double lead_s = 30.0;
};
std::vector<chain::Transaction> adversary_step(const HolderAgent& agent, const chain::Ledger& view,
                                               const core::TimelockRequest& request, double local_time);

// A request whose commitment_b uses r' = r + 1, so every share mismatches.
core::TimelockRequest framing_request(const group::Group& group, const group::Scalar& k, const group::Scalar& r,
                                      ByteView message, std::int64_t decrypt_time,
                                      std::span<const group::G1Element> holder_pks, std::uint32_t threshold);

}  // namespace trc::agents
