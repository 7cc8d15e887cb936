// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/agents/config.hpp"

#include <cmath>

namespace trc::agents {

namespace {

constexpr Behavior kBehaviors[] = {Behavior::honest, Behavior::early_submitter, Behavior::wrong_share,
                                   Behavior::framing_client, Behavior::silent};

std::string_view to_string(LatencyKind k) {
    switch (k) {
        case LatencyKind::lognormal: return "lognormal";
        case LatencyKind::exponential: return "exponential";
        case LatencyKind::constant: return "constant";
    }
    return "unknown";
}

LatencyModel latency_from_json(const Json& j, LatencyModel base) {
    if (j.contains("model")) {
        auto m = j.at("model").get<std::string>();
        if (m == "lognormal") base.kind = LatencyKind::lognormal;
        else if (m == "exponential") base.kind = LatencyKind::exponential;
        else if (m == "constant") base.kind = LatencyKind::constant;
        else fail(Errc::ConfigInvalid, "unknown latency model '" + m + "'");
    }
    base.mean_s = j.value("mean_s", base.mean_s);
    base.jitter_s = j.value("jitter_s", base.jitter_s);
    return base;
}

Json to_json(const LatencyModel& m) {
    return Json{{"model", to_string(m.kind)}, {"mean_s", m.mean_s}, {"jitter_s", m.jitter_s}};
}

AgentConfig agent_from_json(const Json& j, Role role) {
    AgentConfig a;
    a.role = role;
    a.behavior = behavior_from_string(j.value("behavior", std::string("honest")));
    if (j.contains("clock_offset_s")) a.clock_offset_s = j.at("clock_offset_s").get<double>();
    if (j.contains("latency")) a.latency = latency_from_json(j.at("latency"), LatencyModel{});
    a.lead_s = j.value("lead_s", a.lead_s);
    return a;
}

Json to_json(const AgentConfig& a) {
    Json j{{"behavior", to_string(a.behavior)}, {"lead_s", a.lead_s}};
    if (a.clock_offset_s) j["clock_offset_s"] = *a.clock_offset_s;
    if (a.latency) j["latency"] = to_json(*a.latency);
    return j;
}

}  // namespace

std::string_view to_string(Behavior b) noexcept {
    switch (b) {
        case Behavior::honest: return "honest";
        case Behavior::early_submitter: return "early_submitter";
        case Behavior::wrong_share: return "wrong_share";
        case Behavior::framing_client: return "framing_client";
        case Behavior::silent: return "silent";
    }
    return "unknown";
}

Behavior behavior_from_string(std::string_view s) {
    for (auto b : kBehaviors)
        if (to_string(b) == s) return b;
    fail(Errc::ConfigInvalid, "unknown behavior '" + std::string(s) + "'");
}

void validate(const ScenarioConfig& c) {
    auto bad = [](const std::string& what) { fail(Errc::ConfigInvalid, what); };
    const auto n = c.n();
    if (n < 3) bad("at least 3 holders are required");
    if (c.threshold < 1 || c.threshold > n) bad("threshold must lie in [1, n]");
    if (!c.allow_insecure_threshold && 2 * c.threshold <= n) bad("threshold must exceed n/2");
    if (c.ntp_bound_s < 0) bad("ntp_bound_s must be non-negative");
    if (!(c.block_interval_s > 0)) bad("block_interval_s must be positive");
    if (c.verify_cost_s < 0 || c.observe_latency_s < 0) bad("costs must be non-negative");
    if (c.requests.durations_s.empty() || c.requests.per_duration == 0) bad("scenario posts no requests");
    for (auto d : c.requests.durations_s)
        if (d <= 0) bad("request durations must be positive");
    if (c.requests.start_offset_s < 0 || c.requests.spacing_s < 0) bad("request schedule must be non-negative");
    if (c.proposers.count == 0) bad("at least one block proposer is required");
    if (c.proposers.adversarial > c.proposers.count) bad("more adversarial proposers than proposers");
    if (c.deposit < c.ledger.deposit_min) bad("holder deposit below the ledger minimum");
    if (c.client.behavior != Behavior::honest && c.client.behavior != Behavior::framing_client)
        bad("client behavior must be honest or framing_client");
    auto check_latency = [&](const LatencyModel& m) {
        if (m.mean_s < 0 || m.jitter_s < 0) bad("latency parameters must be non-negative");
    };
    check_latency(c.default_latency);
    for (const auto& h : c.holders) {
        if (h.behavior == Behavior::framing_client) bad("framing_client is a client behavior");
        if (h.latency) check_latency(*h.latency);
        if (h.behavior == Behavior::honest && h.clock_offset_s && std::abs(*h.clock_offset_s) > c.ntp_bound_s)
            bad("honest holder clock offset exceeds the NTP bound");
        if (h.behavior == Behavior::early_submitter && h.lead_s <= 0) bad("early_submitter needs a positive lead");
    }
}

ScenarioConfig scenario_from_json(const Json& j) {
    ScenarioConfig c;
    try {
        c.name = j.value("name", c.name);
        if (j.contains("group")) c.group = core::group_config_from_json(j.at("group"));
        if (j.contains("ledger")) c.ledger = chain::ledger_params_from_json(j.at("ledger"));
        if (j.contains("default_latency")) c.default_latency = latency_from_json(j.at("default_latency"), c.default_latency);

        if (j.contains("holders")) {
            for (const auto& h : j.at("holders")) c.holders.push_back(agent_from_json(h, Role::holder));
        } else {
            c.holders.assign(j.value("holder_count", 4u), AgentConfig{});
        }
        if (j.contains("adversaries")) {
            for (const auto& a : j.at("adversaries")) {
                auto index = a.at("index").get<std::uint32_t>();
                if (index < 1 || index > c.holders.size()) fail(Errc::ConfigInvalid, "adversary index out of range");
                c.holders[index - 1] = agent_from_json(a, Role::holder);
            }
        }
        if (j.contains("client")) c.client = agent_from_json(j.at("client"), Role::client);
        c.threshold = j.value("threshold", c.n() / 2 + 1);
        c.allow_insecure_threshold = j.value("allow_insecure_threshold", false);
        if (j.contains("requests")) {
            const auto& r = j.at("requests");
            c.requests.durations_s = r.value("durations_s", c.requests.durations_s);
            c.requests.per_duration = r.value("per_duration", c.requests.per_duration);
            c.requests.start_offset_s = r.value("start_offset_s", c.requests.start_offset_s);
            c.requests.spacing_s = r.value("spacing_s", c.requests.spacing_s);
            c.requests.message_bytes = r.value("message_bytes", c.requests.message_bytes);
        }
        if (j.contains("proposers")) {
            c.proposers.count = j.at("proposers").value("count", c.proposers.count);
            c.proposers.adversarial = j.at("proposers").value("adversarial", c.proposers.adversarial);
        }
        c.block_interval_s = j.value("block_interval_s", c.block_interval_s);
        c.ntp_bound_s = j.value("ntp_bound_s", c.ntp_bound_s);
        c.verify_cost_s = j.value("verify_cost_s", c.verify_cost_s);
        c.observe_latency_s = j.value("observe_latency_s", c.observe_latency_s);
        c.deposit = j.value("deposit", c.deposit);
        if (j.contains("fee")) c.fee = j.at("fee").get<std::int64_t>();
    } catch (const Json::exception& e) {
        fail(Errc::ConfigInvalid, e.what());
    } catch (const Error& e) {
        if (e.code() == Errc::ConfigInvalid) throw;
        fail(Errc::ConfigInvalid, e.what());
    }
    validate(c);
    return c;
}

Json to_json(const ScenarioConfig& c) {
    Json holders = Json::array();
    for (const auto& h : c.holders) holders.push_back(to_json(h));
    Json j{{"name", c.name},
           {"group", core::to_json(c.group)},
           {"ledger", chain::to_json(c.ledger)},
           {"holders", std::move(holders)},
           {"client", to_json(c.client)},
           {"threshold", c.threshold},
           {"allow_insecure_threshold", c.allow_insecure_threshold},
           {"requests",
            {{"durations_s", c.requests.durations_s},
             {"per_duration", c.requests.per_duration},
             {"start_offset_s", c.requests.start_offset_s},
             {"spacing_s", c.requests.spacing_s},
             {"message_bytes", c.requests.message_bytes}}},
           {"proposers", {{"count", c.proposers.count}, {"adversarial", c.proposers.adversarial}}},
           {"default_latency", to_json(c.default_latency)},
           {"block_interval_s", c.block_interval_s},
           {"ntp_bound_s", c.ntp_bound_s},
           {"verify_cost_s", c.verify_cost_s},
           {"observe_latency_s", c.observe_latency_s},
           {"deposit", c.deposit}};
    if (c.fee) j["fee"] = *c.fee;
    return j;
}

}  // namespace trc::agents
