// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <catch_amalgamated.hpp>

#include <set>

#include "support/ledger_fuzz.hpp"
#include "trc/chain/ledger.hpp"
#include "trc/core/keys.hpp"

using namespace trc;
using namespace trc::chain;
using trc::group::BigUint;
using trc::group::Scalar;

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

Scalar sc(std::uint64_t v) { return Scalar(BigUint(v)); }

constexpr std::int64_t kStart = 1'000'000;
constexpr std::int64_t kDecrypt = kStart + 600;

struct Workflow {
    group::GroupPtr grp = group::make_group(group::ToyConfig{23, 11, {}});
    Ledger ledger{grp, params()};
    std::vector<core::KeyPair> keys;
    core::TimelockRequest req;
    std::int64_t clock = kStart;

    static LedgerParams params() {
        LedgerParams p;
        p.genesis_time = kStart;
        return p;
    }

    explicit Workflow(std::uint32_t t = 3) {
        std::uint32_t i = 1;
        for (std::uint64_t sk : {3, 4, 5, 6}) {
            keys.push_back(core::keypair_from_secret(*grp, sc(sk), i++));
            ledger.register_holder(keys.back().pk, 100, core::prove_possession(*grp, keys.back()));
        }
        req = core::build_request(*grp, sc(22), sc(7), as_bytes("hello"), kDecrypt, ledger.holder_pks(4), t);
        ledger.post_request(req, 10 * t);
    }

    void tick(std::int64_t seconds) {
        clock += seconds;
        REQUIRE(ledger.advance_block(0, clock, clock).accepted);
    }
    void tick_to(std::int64_t when) { tick(when - clock); }

    SubmitOutcome submit(std::uint32_t i) {
        return ledger.submit_share(i, req.request_id, core::derive_share(*grp, req, keys[i - 1]));
    }
};

}  // namespace

TEST_CASE("register_holder") {
    auto grp = group::make_group(group::ToyConfig{23, 11, {}});
    Ledger ledger(grp, LedgerParams{});
    std::vector<core::KeyPair> keys;
    for (std::uint64_t sk : {3, 4, 5, 6}) keys.push_back(core::keypair_from_secret(*grp, sc(sk)));
    for (std::uint32_t i = 0; i < 4; ++i)
        CHECK(ledger.register_holder(keys[i].pk, 100, core::prove_possession(*grp, keys[i])) == i + 1);

    auto extra = core::keypair_from_secret(*grp, sc(7));
    auto before = ledger.state_hash();
    CHECK(error_of([&] { ledger.register_holder(extra.pk, 99, core::prove_possession(*grp, extra)); }) ==
          Errc::InsufficientDeposit);
    CHECK(error_of([&] { ledger.register_holder(keys[0].pk, 100, core::prove_possession(*grp, keys[0])); }) ==
          Errc::DuplicateKey);
    CHECK(error_of([&] { ledger.register_holder(extra.pk, 100, core::prove_possession(*grp, keys[1])); }) ==
          Errc::BadPossessionProof);
    CHECK(ledger.state_hash() == before);
    CHECK(ledger.log().size() == 7);
    CHECK_FALSE(ledger.log().back().second.ok);
}

TEST_CASE("advance_block enforces monotonicity and the drift bound") {
    Workflow w;
    CHECK(w.ledger.advance_block(0, w.clock + 15, w.clock).accepted);
    auto r = w.ledger.advance_block(0, w.clock + 16 + 15, w.clock + 15);
    CHECK_FALSE(r.accepted);
    CHECK(r.reason == "beyond drift bound");
    CHECK_FALSE(w.ledger.advance_block(0, w.clock + 15, w.clock + 100).accepted);
    CHECK_FALSE(w.ledger.advance_block(0, w.clock + 10, w.clock + 100).accepted);
    CHECK_FALSE(w.ledger.advance_block(9, w.clock + 20, w.clock + 100).accepted);
    CHECK(w.ledger.advance_block(2, w.clock + 20, w.clock + 100).accepted);
    for (std::size_t i = 1; i < w.ledger.blocks().size(); ++i)
        CHECK(w.ledger.blocks()[i].timestamp > w.ledger.blocks()[i - 1].timestamp);
}

TEST_CASE("post_request") {
    Workflow w;
    CHECK(w.ledger.find_request(w.req.request_id) != nullptr);
    CHECK(w.ledger.accounts().escrow == 30);

    auto bad = w.req;
    bad.threshold = 5;
    bad.request_id = core::compute_request_id(bad);
    CHECK(error_of([&] { w.ledger.post_request(bad, 100); }) == Errc::MalformedRequest);

    auto other = core::build_request(*w.grp, sc(5), sc(9), as_bytes("x"), kDecrypt, w.ledger.holder_pks(4), 3);
    CHECK(error_of([&] { w.ledger.post_request(other, 29); }) == Errc::InsufficientFee);
    CHECK(w.ledger.post_request(other, 30) == other.request_id);
    CHECK(error_of([&] { w.ledger.post_request(other, 30); }) == Errc::MalformedRequest);
}

TEST_CASE("submit_share timing and status machine") {
    Workflow w;
    w.tick_to(kDecrypt - 1);
    CHECK(w.submit(1) == SubmitOutcome::SlashedEarly);
    CHECK(w.ledger.holders()[0].status == HolderStatus::slashed);
    CHECK(w.ledger.holders()[0].deposit == 0);
    CHECK(w.ledger.accounts().burned == 100);
    CHECK(w.submit(1) == SubmitOutcome::RejectedInactive);
    w.tick_to(kDecrypt);
    CHECK(w.submit(2) == SubmitOutcome::Provisional);
    CHECK(w.ledger.submissions().back().dispute_deadline == kDecrypt + 3600);
    CHECK(error_of([&] { w.submit(2); }) == Errc::DuplicateSubmission);
    CHECK(error_of([&] { w.ledger.submit_share(2, "nope", core::SecretShare{2, w.grp->g1()}); }) ==
          Errc::UnknownRequest);
    CHECK(error_of([&] { w.ledger.submit_share(7, w.req.request_id, core::SecretShare{7, w.grp->g1()}); }) ==
          Errc::UnknownHolder);
}

TEST_CASE("raise_dispute outcomes") {
    Workflow w;
    w.tick_to(kDecrypt);
    auto tampered = core::derive_share(*w.grp, w.req, w.keys[0]);
    tampered.value = w.grp->deserialize_g1(Bytes{20});
    CHECK(w.ledger.submit_share(1, w.req.request_id, tampered) == SubmitOutcome::Provisional);
    CHECK(w.submit(2) == SubmitOutcome::Provisional);

    CHECK(w.ledger.raise_dispute(3, 1) == DisputeOutcome::Dismissed);
    CHECK(w.ledger.raise_dispute(3, 0) == DisputeOutcome::Upheld);
    CHECK(w.ledger.holders()[0].status == HolderStatus::blacklisted);
    CHECK(w.ledger.holders()[2].rewards_earned == 10);
    CHECK(w.ledger.accounts().burned == 90);
    CHECK(error_of([&] { w.ledger.raise_dispute(3, 0); }) == Errc::NotProvisional);
    CHECK(error_of([&] { w.ledger.raise_dispute(3, 99); }) == Errc::UnknownSubmission);
    CHECK(error_of([&] { w.ledger.raise_dispute(1, 1); }) == Errc::InactiveHolder);
    w.tick(3600);
    CHECK(error_of([&] { w.ledger.raise_dispute(3, 1); }) == Errc::NotProvisional);
    CHECK(w.ledger.accounts().balanced());
}

TEST_CASE("raise_dispute blames a framing client") {
    Workflow w;
    auto framed = core::build_request(*w.grp, sc(4), sc(7), as_bytes("f"), kDecrypt, w.ledger.holder_pks(4), 3);
    framed.commitment_b = w.grp->pow(w.grp->g2(), sc(5));
    framed.request_id = core::compute_request_id(framed);
    w.ledger.post_request(framed, 31);
    w.tick_to(kDecrypt);
    for (std::uint32_t i = 1; i <= 2; ++i)
        CHECK(w.ledger.submit_share(i, framed.request_id, core::derive_share(*w.grp, framed, w.keys[i - 1])) ==
              SubmitOutcome::Provisional);
    CHECK(w.ledger.raise_dispute(4, 0) == DisputeOutcome::ClientFault);
    CHECK(w.ledger.find_request(framed.request_id)->status == RequestStatus::voided);
    for (const auto& h : w.ledger.holders()) CHECK(h.status == HolderStatus::active);
    CHECK(w.ledger.holders()[0].rewards_earned == 15);
    CHECK(w.ledger.holders()[1].rewards_earned == 15);
    CHECK(w.ledger.accounts().refunded == 1);
    CHECK(error_of([&] { w.ledger.raise_dispute(4, 1); }) == Errc::NotProvisional);
    CHECK(w.ledger.accounts().balanced());
}

TEST_CASE("finalize_request rewards the first t") {
    Workflow w;
    w.tick_to(kDecrypt);
    CHECK(w.submit(2) == SubmitOutcome::Provisional);
    w.tick(1);
    CHECK(w.submit(4) == SubmitOutcome::Provisional);
    CHECK(w.submit(1) == SubmitOutcome::Provisional);
    w.tick(2);
    CHECK(w.submit(3) == SubmitOutcome::Provisional);
    CHECK(error_of([&] { w.ledger.finalize_request(w.req.request_id); }) == Errc::NotReady);
    w.tick(3600);
    auto report = w.ledger.finalize_request(w.req.request_id);
    CHECK(report.status == RequestStatus::finalized);
    REQUIRE(report.payouts.size() == 3);
    CHECK(report.payouts[0].first == 2);
    CHECK(report.payouts[1].first == 4);
    CHECK(report.payouts[2].first == 1);
    CHECK(report.unrewarded == std::vector<std::uint32_t>{3});
    CHECK(report.reveal_time == kDecrypt + 1);
    CHECK(report.refunded == 0);
    CHECK(w.ledger.holders()[2].rewards_earned == 0);
    CHECK(error_of([&] { w.ledger.finalize_request(w.req.request_id); }) == Errc::RequestClosed);

    std::vector<core::SecretShare> on_chain;
    for (const auto* s : w.ledger.submissions_for(w.req.request_id)) on_chain.push_back(s->share);
    CHECK(core::reconstruct_key(*w.grp, w.req, on_chain, w.ledger.holder_pks(4)) == sc(22));
    CHECK(w.ledger.accounts().balanced());
}

TEST_CASE("finalize_request: exactly t and one early submitter") {
    Workflow w;
    w.tick_to(kDecrypt - 30);
    CHECK(w.submit(4) == SubmitOutcome::SlashedEarly);
    w.tick_to(kDecrypt);
    for (std::uint32_t i = 1; i <= 3; ++i) CHECK(w.submit(i) == SubmitOutcome::Provisional);
    w.tick(3600);
    auto report = w.ledger.finalize_request(w.req.request_id);
    CHECK(report.payouts.size() == 3);
    CHECK(report.unrewarded.empty());
    CHECK(w.ledger.holders()[3].status == HolderStatus::slashed);
    CHECK(w.ledger.accounts().burned == 100);
    CHECK(w.ledger.accounts().balanced());
}

TEST_CASE("finalize_request: liveness failure refunds the client") {
    Workflow w;
    w.tick_to(kDecrypt);
    CHECK(w.submit(1) == SubmitOutcome::Provisional);
    w.tick(3600);
    CHECK(error_of([&] { w.ledger.finalize_request(w.req.request_id); }) == Errc::NotReady);
    w.tick_to(kDecrypt + w.ledger.params().reveal_timeout_s);
    auto report = w.ledger.finalize_request(w.req.request_id);
    CHECK(report.status == RequestStatus::expired);
    CHECK(report.payouts.size() == 1);
    CHECK(report.refunded == 20);
    CHECK_FALSE(report.reveal_time.has_value());
    CHECK(w.ledger.accounts().balanced());
}

TEST_CASE("ledger log replays to the same state") {
    Workflow w;
    w.tick_to(kDecrypt);
    for (std::uint32_t i = 1; i <= 4; ++i) w.submit(i);
    w.tick(4000);
    w.ledger.finalize_request(w.req.request_id);
    auto log = w.ledger.export_log();
    auto replayed = Ledger::replay(log);
    CHECK(replayed.state_hash() == w.ledger.state_hash());
    CHECK(replayed.export_log() == log);

    auto pos = log.find("\"deposit\":100");
    REQUIRE(pos != std::string::npos);
    auto tampered = log;
    tampered.replace(pos, 13, "\"deposit\":101");
    CHECK(error_of([&] { Ledger::replay(tampered); }) == Errc::ReplayMismatch);
    CHECK(error_of([&] { Ledger::replay(""); }) == Errc::MalformedEncoding);

    auto truncated = log.substr(0, log.rfind("{\"end\""));
    CHECK(error_of([&] { Ledger::replay(truncated); }) == Errc::MalformedEncoding);
    CHECK(error_of([&] { Ledger::replay(log + log.substr(log.find('\n') + 1)); }) == Errc::MalformedEncoding);
}

TEST_CASE("random transaction streams", "[property]") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::set<std::uint32_t> slashed;
        std::size_t failures = 0;
        auto ledger = testing::fuzz_ledger(seed, 400, [&](const Ledger& l, const Receipt& r) {
            CHECK(l.accounts().balanced());
            failures += r.ok ? 0 : 1;
            std::set<std::uint32_t> now;
            for (const auto& h : l.holders())
                if (h.status != HolderStatus::active) now.insert(h.index);
            CHECK(std::includes(now.begin(), now.end(), slashed.begin(), slashed.end()));
            slashed = std::move(now);
        });
        CHECK(failures > 0);
        CHECK(failures < ledger.log().size());
        CHECK(Ledger::replay(ledger.export_log()).state_hash() == ledger.state_hash());

        for (const auto& [id, rec] : ledger.requests()) {
            if (rec.status != RequestStatus::finalized) continue;
            std::vector<const ShareSubmission*> valid;
            for (const auto* s : ledger.submissions_for(id))
                if (s->status == SubmissionStatus::finalized) valid.push_back(s);
            REQUIRE(valid.size() >= rec.request.threshold);
            const auto* tth = valid[rec.request.threshold - 1];
            CHECK(tth->block_time >= rec.request.decrypt_time);
            CHECK(ledger.blocks()[tth->block_height].reference_time >=
                  rec.request.decrypt_time - ledger.params().max_forward_drift_s);
        }
    }
}

TEST_CASE("random streams reach every outcome") {
    std::set<std::string> outcomes;
    std::set<Errc> errors;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        testing::fuzz_ledger(seed, 400, [&](const Ledger&, const Receipt& r) {
            if (!r.ok) errors.insert(r.error);
            if (r.result.contains("outcome")) outcomes.insert(r.result["outcome"].get<std::string>());
            if (r.result.contains("status")) outcomes.insert(r.result["status"].get<std::string>());
        });
    }
    for (auto o : {"Provisional", "SlashedEarly", "RejectedInactive", "Upheld", "Dismissed", "ClientFault", "finalized",
                   "expired"})
        CHECK(outcomes.contains(o));
    for (auto e : {Errc::InsufficientDeposit, Errc::DuplicateKey, Errc::BadPossessionProof, Errc::InsufficientFee,
                   Errc::DuplicateSubmission, Errc::NotProvisional, Errc::NotReady, Errc::RequestClosed})
        CHECK(errors.contains(e));
}
