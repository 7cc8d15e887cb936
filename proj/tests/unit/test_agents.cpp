// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "trc/agents/engine.hpp"
#include "trc/agents/metrics.hpp"

using namespace trc;
using namespace trc::agents;

namespace {

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected trc::Error");
    return Errc::IoError;
}

ScenarioConfig honest(std::uint32_t n, std::uint32_t t) {
    ScenarioConfig c;
    c.name = "test";
    c.holders.assign(n, AgentConfig{});
    c.threshold = t;
    return c;
}

AgentConfig as(Behavior b) {
    AgentConfig a;
    a.behavior = b;
    return a;
}

std::set<std::uint32_t> rewarded(const ScenarioReport& r) {
    std::set<std::uint32_t> out;
    for (const auto& h : r.holders)
        if (h.rewards > 0) out.insert(h.index);
    return out;
}

std::size_t slashed_honest(const ScenarioReport& r) {
    std::size_t count = 0;
    for (const auto& h : r.holders)
        if (h.behavior == Behavior::honest && h.status != chain::HolderStatus::active) ++count;
    for (const auto& s : r.slashes)
        if (r.holders.at(s.holder - 1).behavior == Behavior::honest) ++count;
    return count;
}

}  // namespace

TEST_CASE("four honest holders reconstruct and the first three are paid") {
    auto rep = run_scenario(honest(4, 3), 7);
    REQUIRE(rep.requests.size() == 1);
    const auto& req = rep.requests[0];
    CHECK(req.reconstructed);
    CHECK(req.status == chain::RequestStatus::finalized);
    REQUIRE(req.reveal_time);
    CHECK(*req.reveal_time >= req.requested_time);
    CHECK(*req.deviation_s == static_cast<double>(*req.reveal_time - req.requested_time));
    CHECK(rewarded(rep).size() == 3);
    CHECK(rep.slashes.empty());
    CHECK(rep.disputes.empty());
    CHECK(rep.conserved);
    for (const auto& h : rep.holders) CHECK((h.rewards == 0 || h.rewards == 10));
}

TEST_CASE("an early submitter is slashed and the rest still reconstruct") {
    auto cfg = honest(4, 3);
    cfg.holders[3] = as(Behavior::early_submitter);
    cfg.holders[3].lead_s = 30;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto rep = run_scenario(cfg, seed);
        REQUIRE(rep.slashes.size() == 1);
        CHECK(rep.slashes[0].holder == 4);
        CHECK(rep.slashes[0].reason == "early");
        CHECK(rep.slashes[0].block_time < rep.requests[0].requested_time);
        CHECK(rep.holders[3].status == chain::HolderStatus::slashed);
        CHECK(rep.requests[0].reconstructed);
        CHECK(rewarded(rep) == std::set<std::uint32_t>{1, 2, 3});
        CHECK(rep.conserved);
    }
}

TEST_CASE("all-silent holders leave the request to expire with a refund") {
    auto cfg = honest(10, 6);
    for (auto& h : cfg.holders) h.behavior = Behavior::silent;
    auto rep = run_scenario(cfg, 3);
    REQUIRE(rep.requests.size() == 1);
    CHECK_FALSE(rep.requests[0].reconstructed);
    CHECK(rep.requests[0].status == chain::RequestStatus::expired);
    CHECK_FALSE(rep.requests[0].reveal_time);
    CHECK(rewarded(rep).empty());
    CHECK(rep.conserved);

    // The refund is visible in the ledger log.
    auto run = run_scenario_with_log(cfg, 3);
    CHECK(run.ledger_log.find("\"refunded\":60") != std::string::npos);
}

TEST_CASE("a wrong share is disputed and upheld") {
    auto cfg = honest(4, 3);
    cfg.holders[1] = as(Behavior::wrong_share);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto rep = run_scenario(cfg, seed);
        REQUIRE_FALSE(rep.disputes.empty());
        CHECK(std::any_of(rep.disputes.begin(), rep.disputes.end(), [](const DisputeEvent& d) {
            return d.accused == 2 && d.outcome == chain::DisputeOutcome::Upheld;
        }));
        CHECK(rep.holders[1].status == chain::HolderStatus::blacklisted);
        CHECK(slashed_honest(rep) == 0);
        CHECK(rep.requests[0].reconstructed);
        CHECK(rep.requests[0].status == chain::RequestStatus::finalized);
        CHECK(rep.holders[1].rewards == 0);
        CHECK(rep.conserved);
    }
}

TEST_CASE("a framing client only produces client-fault disputes") {
    auto cfg = honest(4, 3);
    cfg.client.behavior = Behavior::framing_client;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto rep = run_scenario(cfg, seed);
        REQUIRE_FALSE(rep.disputes.empty());
        for (const auto& d : rep.disputes) CHECK(d.outcome == chain::DisputeOutcome::ClientFault);
        CHECK(rep.slashes.empty());
        CHECK(slashed_honest(rep) == 0);
        CHECK(rep.requests[0].status == chain::RequestStatus::voided);
        CHECK_FALSE(rep.requests[0].reconstructed);
        CHECK(rep.conserved);
    }
}

TEST_CASE("adversary_step follows the configured behavior") {
    auto grp = group::make_group(group::ToyConfig{1009, 11, {}});
    chain::Ledger ledger(grp, chain::LedgerParams{});
    std::vector<core::KeyPair> keys;
    for (std::uint32_t i = 1; i <= 3; ++i) {
        keys.push_back(core::keygen(*grp, 40 + i, i));
        ledger.register_holder(keys.back().pk, 100, core::prove_possession(*grp, keys.back()));
    }
    ledger.advance_block(0, 1000, 1000);
    const Bytes msg{1, 2, 3};
    const auto pks = ledger.holder_pks(3);
    auto req = core::build_request(*grp, grp->share_field().from_u64(5), grp->exponents().from_u64(9), msg, 1100,
                                   pks, 2);
    ledger.post_request(req, 20);

    CHECK(error_of([&] { adversary_step(HolderAgent{keys[0], Behavior::honest, 30}, ledger, req, 0); }) ==
          Errc::InvalidArgument);

    HolderAgent early{keys[0], Behavior::early_submitter, 30};
    CHECK(adversary_step(early, ledger, req, 1069.5).empty());
    auto txs = adversary_step(early, ledger, req, 1070);
    REQUIRE(txs.size() == 1);
    const auto& sub = std::get<chain::SubmitShare>(txs[0]);
    CHECK(sub.share == core::derive_share(*grp, req, keys[0]));

    HolderAgent wrong{keys[1], Behavior::wrong_share, 30};
    CHECK(adversary_step(wrong, ledger, req, 1200).empty());  // chain still before decrypt
    ledger.advance_block(0, 1100, 1100);
    txs = adversary_step(wrong, ledger, req, 1100);
    REQUIRE(txs.size() == 1);
    const auto& bad = std::get<chain::SubmitShare>(txs[0]);
    CHECK(core::verify_share(*grp, bad.share, keys[1].pk, req) == core::ShareVerdict::InvalidShare);

    CHECK(adversary_step(HolderAgent{keys[2], Behavior::silent, 30}, ledger, req, 2000).empty());

    auto framed = framing_request(*grp, grp->share_field().from_u64(5), grp->exponents().from_u64(9), msg, 1100,
                                  pks, 2);
    CHECK(framed.request_id != req.request_id);
    CHECK_NOTHROW(core::validate_request(*grp, framed));
    CHECK(core::verify_share(*grp, core::derive_share(*grp, framed, keys[2]), keys[2].pk, framed) ==
          core::ShareVerdict::DishonestClient);
}

TEST_CASE("identical config and seed give identical reports") {
    auto cfg = honest(5, 3);
    cfg.holders[4] = as(Behavior::early_submitter);
    cfg.requests.durations_s = {120, 900};
    cfg.requests.per_duration = 3;
    auto a = run_scenario_with_log(cfg, 99);
    auto b = run_scenario_with_log(cfg, 99);
    CHECK(to_json(a.report) == to_json(b.report));
    CHECK(a.ledger_log == b.ledger_log);
    auto c = run_scenario(cfg, 100);
    CHECK(to_json(c) != to_json(a.report));

    // The exported log replays to the reported state hash.
    auto replayed = chain::Ledger::replay(a.ledger_log);
    CHECK(replayed.state_hash() == a.report.state_hash);
}

TEST_CASE("an adversarial proposer cannot pull reveals more than 15 s early") {
    auto cfg = honest(4, 3);
    cfg.proposers = ProposerConfig{4, 1};
    cfg.requests.per_duration = 4;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto rep = run_scenario(cfg, seed);
        for (const auto& r : rep.requests) {
            REQUIRE(r.reveal_time);
            CHECK(*r.reveal_time >= r.requested_time);
            CHECK(*r.reveal_reference_time >= r.requested_time - 15);
        }
        CHECK(slashed_honest(rep) == 0);
    }
    cfg.proposers = ProposerConfig{1, 1};
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        for (const auto& r : run_scenario(cfg, seed).requests)
            CHECK(*r.reveal_reference_time >= r.requested_time - 15);
}

TEST_CASE("zero latency and zero offsets reveal within one block of decrypt time") {
    auto cfg = honest(4, 3);
    cfg.ntp_bound_s = 0;
    cfg.observe_latency_s = 0;
    cfg.default_latency = LatencyModel{LatencyKind::constant, 0, 0};
    for (auto& h : cfg.holders) h.clock_offset_s = 0;
    cfg.requests.per_duration = 5;
    auto rep = run_scenario(cfg, 5);
    auto stats = measure_deviation(std::span(&rep, 1));
    CHECK(stats.requests == 5);
    CHECK(stats.min_s >= 0);
    CHECK(stats.max_s <= cfg.block_interval_s);
}

TEST_CASE("mean deviation matches the exponential order statistic") {
    // Holders see the decrypt block after observe_latency, then each share
    // arrives after an independent exponential delay; the t-th arrival of n
    // has expectation mean * sum_{j<t} 1/(n-j). Inclusion rounds up to the
    // next whole-second block, adding between 0 and 1 s.
    const std::uint32_t n = 12, t = 10;
    auto cfg = honest(n, t);
    cfg.ntp_bound_s = 0;
    for (auto& h : cfg.holders) h.clock_offset_s = 0;
    cfg.default_latency = LatencyModel{LatencyKind::exponential, 2.0, 0};
    cfg.requests.per_duration = 150;
    cfg.requests.spacing_s = 30;
    auto rep = run_scenario(cfg, 11);
    auto stats = measure_deviation(std::span(&rep, 1));
    REQUIRE(stats.requests == 150);

    double expected = cfg.observe_latency_s;
    for (std::uint32_t j = 0; j < t; ++j) expected += cfg.default_latency.mean_s / static_cast<double>(n - j);
    CHECK(stats.mean_s - expected >= -0.3);
    CHECK(stats.mean_s - expected <= 1.3);
}

TEST_CASE("deviation does not depend on the encryption duration") {
    auto cfg = honest(4, 3);
    cfg.requests.durations_s = {600, 3600, 86400, 604800};
    cfg.requests.per_duration = 20;
    auto rep = run_scenario(cfg, 21);
    auto stats = measure_deviation(std::span(&rep, 1));
    REQUIRE(stats.series.size() == 4);
    for (const auto& b : stats.series) {
        CHECK(b.requests == 20);
        CHECK(std::abs(b.mean_s - stats.mean_s) < 1.0);
    }
    auto csv = deviation_csv(stats);
    CHECK(csv.rfind("duration_s,requests,mean_deviation_s,min_deviation_s,max_deviation_s,mean_decrypt_delay_s\n", 0) ==
          0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("measure_deviation rejects reports without reveals") {
    CHECK(error_of([] { measure_deviation({}); }) == Errc::EmptyReport);
    auto cfg = honest(4, 3);
    for (auto& h : cfg.holders) h.behavior = Behavior::silent;
    auto rep = run_scenario(cfg, 1);
    CHECK(error_of([&] { measure_deviation(std::span(&rep, 1)); }) == Errc::EmptyReport);
}

TEST_CASE("scalability: verification grows linearly, publish latency stays flat") {
    auto base = honest(3, 2);
    base.requests.per_duration = 5;
    const std::uint32_t ns[] = {3, 10, 20, 30, 40};
    auto points = scalability_sweep(base, ns, 8);
    REQUIRE(points.size() == 5);
    std::vector<double> t, work;
    for (const auto& p : points) {
        CHECK(p.requests == 5);
        CHECK(p.threshold == p.n / 2 + 1);
        t.push_back(p.threshold);
        work.push_back(p.verification_latency_s);
    }
    CHECK(linear_fit_r2(t, work) >= 0.9);
    const double ratio = points.back().publish_latency_s / points.front().publish_latency_s;
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 2.0);
    CHECK(points.front().verifications_per_holder == 2.0);

    auto csv = scalability_csv(points);
    CHECK(csv.rfind("n,threshold,requests,publish_latency_s,verification_latency_s,verifications_per_holder\n", 0) == 0);
}

TEST_CASE("linear_fit_r2 against hand-computed fits") {
    const double x[] = {1, 2, 3, 4};
    const double line[] = {3, 5, 7, 9};
    CHECK(linear_fit_r2(x, line) == Catch::Approx(1.0));
    // y = (1,3,2,4): sxx = 5, sxy = 4, syy = 5, r^2 = 16/25.
    const double noisy[] = {1, 3, 2, 4};
    CHECK(linear_fit_r2(x, noisy) == Catch::Approx(0.64));
    const double one[] = {1};
    CHECK(error_of([&] { linear_fit_r2(one, one); }) == Errc::InvalidArgument);
}

TEST_CASE("honest holders are never slashed under modeled adversaries") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto cfg = honest(5, 3);
        const auto pick = mix_seed(seed, 77);
        cfg.holders[pick % 5] = as(Behavior::early_submitter);
        cfg.holders[(pick / 5) % 5].behavior = Behavior::wrong_share;
        if (pick % 3 == 0) cfg.client.behavior = Behavior::framing_client;
        cfg.proposers.adversarial = static_cast<std::uint32_t>(pick % 2);
        auto rep = run_scenario(cfg, seed);
        CHECK(slashed_honest(rep) == 0);
        CHECK(rep.conserved);
    }
}

TEST_CASE("scenario configs are validated") {
    CHECK(error_of([] { run_scenario(honest(2, 2), 1); }) == Errc::ConfigInvalid);
    CHECK(error_of([] { run_scenario(honest(4, 2), 1); }) == Errc::ConfigInvalid);
    CHECK(error_of([] { run_scenario(honest(4, 5), 1); }) == Errc::ConfigInvalid);
    auto insecure = honest(4, 2);
    insecure.allow_insecure_threshold = true;
    CHECK_NOTHROW(validate(insecure));

    auto drift = honest(4, 3);
    drift.holders[0].clock_offset_s = 1.5;
    CHECK(error_of([&] { validate(drift); }) == Errc::ConfigInvalid);
    drift.holders[0].behavior = Behavior::early_submitter;
    CHECK_NOTHROW(validate(drift));

    auto frame_holder = honest(4, 3);
    frame_holder.holders[0].behavior = Behavior::framing_client;
    CHECK(error_of([&] { validate(frame_holder); }) == Errc::ConfigInvalid);

    CHECK(error_of([] { scenario_from_json(Json{{"holder_count", 4}, {"adversaries", {{{"index", 5}}}}}); }) ==
          Errc::ConfigInvalid);
    CHECK(error_of([] { scenario_from_json(Json{{"default_latency", {{"model", "gamma"}}}}); }) ==
          Errc::ConfigInvalid);
    CHECK(error_of([] { scenario_from_json(Json{{"holder_count", "four"}}); }) == Errc::ConfigInvalid);
    CHECK(error_of([] { behavior_from_string("sneaky"); }) == Errc::ConfigInvalid);
}

TEST_CASE("scenario JSON round trips") {
    auto cfg = scenario_from_json(Json{{"name", "early_submitter"},
                                       {"holder_count", 4},
                                       {"threshold", 3},
                                       {"adversaries", {{{"index", 4}, {"behavior", "early_submitter"}, {"lead_s", 30}}}},
                                       {"requests", {{"durations_s", {600}}}}});
    CHECK(cfg.n() == 4);
    CHECK(cfg.holders[3].behavior == Behavior::early_submitter);
    auto again = scenario_from_json(to_json(cfg));
    CHECK(to_json(again) == to_json(cfg));
    CHECK(scenario_from_json(Json{{"holder_count", 7}}).threshold == 4);
}
