// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trc/chain/ledger.hpp"

namespace trc::agents {

using chain::Json;

enum class Role { client, holder };
enum class Behavior { honest, early_submitter, wrong_share, framing_client, silent };
enum class LatencyKind { lognormal, exponential, constant };

std::string_view to_string(Behavior b) noexcept;
Behavior behavior_from_string(std::string_view s);

struct LatencyModel {
    LatencyKind kind = LatencyKind::lognormal;
    double mean_s = 2.0;
    double jitter_s = 0.5;  // standard deviation for lognormal; unused otherwise
};

struct AgentConfig {
    Role role = Role::holder;
    Behavior behavior = Behavior::honest;
    std::optional<double> clock_offset_s;  // drawn within the NTP bound when absent
    std::optional<LatencyModel> latency;   // scenario default when absent
    double lead_s = 30.0;                  // early_submitter only
};

struct RequestPlan {
    std::vector<std::int64_t> durations_s{600};
    std::uint32_t per_duration = 1;
    std::int64_t start_offset_s = 10;
    std::int64_t spacing_s = 60;
    std::size_t message_bytes = 32;
};

struct ProposerConfig {
    std::uint32_t count = 4;
    std::uint32_t adversarial = 0;  // how many of count claim the maximum drift
};

struct ScenarioConfig {
    std::string name = "scenario";
    group::GroupConfig group = group::ToyConfig{1000003, 2, {}};
    chain::LedgerParams ledger;
    std::vector<AgentConfig> holders;
    AgentConfig client{Role::client, Behavior::honest, 0.0, std::nullopt, 0.0};
    std::uint32_t threshold = 0;
    bool allow_insecure_threshold = false;
    RequestPlan requests;
    ProposerConfig proposers;
    LatencyModel default_latency;
    double block_interval_s = 1.0;
    double ntp_bound_s = 1.0;
    double verify_cost_s = 0.5;
    double observe_latency_s = 0.5;
    std::int64_t deposit = 100;
    std::optional<std::int64_t> fee;  // t * reward_per_share when absent

    std::uint32_t n() const { return static_cast<std::uint32_t>(holders.size()); }
};

// Checks the preconditions of a run; throws ConfigInvalid.
void validate(const ScenarioConfig& config);

ScenarioConfig scenario_from_json(const Json& j);
Json to_json(const ScenarioConfig& config);

}  // namespace trc::agents
