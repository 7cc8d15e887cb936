// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

// Random transaction streams against the ledger. Mixes valid and invalid
// transactions so every branch of the state machine is reached.

#pragma once

#include <functional>
#include <map>
#include <random>

#include "trc/chain/ledger.hpp"
#include "trc/core/keys.hpp"

namespace trc::testing {

inline chain::LedgerParams fuzz_params() {
    chain::LedgerParams p;
    p.deposit_min = 50;
    p.reward_per_share = 7;
    p.dispute_window_s = 20;
    p.reveal_timeout_s = 120;
    p.genesis_time = 1000;
    return p;
}

// Calls on_tx after every applied transaction.
inline chain::Ledger fuzz_ledger(std::uint64_t seed, std::size_t count,
                                 const std::function<void(const chain::Ledger&, const chain::Receipt&)>& on_tx = {}) {
    using namespace trc::chain;
    auto grp = group::make_group(group::ToyConfig{1009, 11, {}});
    Ledger ledger(grp, fuzz_params());
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t n) { return n == 0 ? 0 : rng() % n; };

    std::vector<core::KeyPair> pool;
    for (std::uint32_t i = 0; i < 10; ++i) pool.push_back(core::keygen(*grp, seed * 100 + i + 1));
    std::map<std::uint32_t, core::KeyPair> by_index;
    std::vector<std::string> request_ids;
    std::int64_t clock = ledger.head().timestamp;
    HashDrbg drbg(seed, "test/fuzz");

    while (ledger.log().size() < count) {
        clock += static_cast<std::int64_t>(pick(4));
        const auto roll = pick(100);
        Transaction tx;
        if (roll < 10) {
            auto kp = pool[pick(pool.size())];
            auto proof = core::prove_possession(*grp, pick(8) == 0 ? pool[pick(pool.size())] : kp);
            tx = RegisterHolder{kp.pk, 40 + static_cast<std::int64_t>(pick(30)), proof};
        } else if (roll < 40) {
            auto proposer = static_cast<std::uint32_t>(pick(ledger.holders().size() + 2));
            auto claimed = ledger.head().timestamp + static_cast<std::int64_t>(pick(25)) - 3;
            tx = AdvanceBlock{proposer, claimed, clock};
        } else if (roll < 52 && ledger.holders().size() >= 2) {
            auto n = static_cast<std::uint32_t>(2 + pick(ledger.holders().size() - 1));
            auto t = static_cast<std::uint32_t>(1 + pick(n));
            auto pks = ledger.holder_pks(n);
            auto req = core::build_request(*grp, grp->share_field().random_nonzero(drbg),
                                           grp->exponents().random_nonzero(drbg), as_bytes("fuzz"),
                                           ledger.head().timestamp + static_cast<std::int64_t>(pick(40)), pks, t);
            if (pick(6) == 0) {
                req.commitment_b = grp->pow(grp->g2(), grp->exponents().random_nonzero(drbg));
                req.request_id = core::compute_request_id(req);
            }
            request_ids.push_back(req.request_id);
            auto fee = static_cast<std::int64_t>(t) * ledger.params().reward_per_share + static_cast<std::int64_t>(pick(20)) - 2;
            tx = PostRequest{req, fee};
        } else if (roll < 78 && !request_ids.empty() && !by_index.empty()) {
            const auto& id = request_ids[pick(request_ids.size())];
            auto it = by_index.begin();
            std::advance(it, static_cast<std::ptrdiff_t>(pick(by_index.size())));
            auto kp = it->second;
            core::SecretShare share{kp.index, grp->g1()};
            if (const auto* rec = ledger.find_request(id); rec && kp.index <= rec->request.holders)
                share = core::derive_share(*grp, rec->request, kp);
            if (pick(5) == 0) share.value = grp->mul(share.value, grp->g1());
            tx = SubmitShare{kp.index, id, share};
        } else if (roll < 88 && !ledger.submissions().empty()) {
            tx = RaiseDispute{static_cast<std::uint32_t>(1 + pick(ledger.holders().size() + 1)),
                              pick(ledger.submissions().size() + 1)};
        } else if (!request_ids.empty()) {
            tx = FinalizeRequest{request_ids[pick(request_ids.size())]};
        } else {
            tx = AdvanceBlock{0, ledger.head().timestamp + 1, clock};
        }
        auto receipt = ledger.apply(tx);
        if (const auto* reg = std::get_if<RegisterHolder>(&tx); reg && receipt.ok) {
            for (auto kp : pool)
                if (kp.pk == reg->pk) {
                    kp.index = receipt.result.at("index").get<std::uint32_t>();
                    by_index[kp.index] = kp;
                }
        }
        if (on_tx) on_tx(ledger, receipt);
    }
    return ledger;
}

}  // namespace trc::testing
