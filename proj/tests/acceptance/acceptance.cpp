// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support/ledger_fuzz.hpp"
#include "support/oracles.hpp"
#include "support/voting_oracle.hpp"
#include "trc/agents/engine.hpp"
#include "trc/agents/metrics.hpp"
#include "trc/common/drbg.hpp"
#include "trc/core/codec.hpp"
#include "trc/core/protocol.hpp"
#include "trc/voting/voting.hpp"

using namespace trc;
using core::G1Element;
using core::KeyPair;
using core::SecretShare;
using core::ShareVerdict;
using group::BigUint;
using group::Scalar;
namespace oracle = trc::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects the first few mismatches so a FAIL line says what broke.
class Check {
public:
    void expect(bool cond, const std::string& what) {
        ++checks_;
        if (cond) return;
        ++failures_;
        if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
    }
    bool ok() const { return failures_ == 0; }
    std::uint64_t checks() const { return checks_; }
    std::string summary(const std::string& pass_text) const {
        if (ok()) return pass_text;
        return std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + first_;
    }

private:
    std::uint64_t checks_ = 0;
    std::uint64_t failures_ = 0;
    std::string first_;
};

Scalar sc(std::uint64_t v) { return Scalar(BigUint(v)); }
std::uint64_t u64(const Scalar& s) { return static_cast<std::uint64_t>(s.value()); }

std::uint64_t big_endian(const Bytes& b) {
    std::uint64_t v = 0;
    for (auto x : b) v = v << 8 | x;
    return v;
}

std::uint64_t mask_value(const core::TimelockRequest& req, std::uint32_t i) {
    for (const auto& m : req.masks)
        if (m.index == i) return big_endian(m.alpha);
    return 0;
}

core::Json load_json(const std::string& rel) {
    std::ifstream in(std::string(TRC_SOURCE_DIR) + "/" + rel);
    if (!in) throw std::runtime_error("cannot read " + rel);
    return core::Json::parse(in);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

agents::ScenarioConfig honest_config(std::uint32_t n, std::uint32_t t) {
    agents::ScenarioConfig c;
    c.name = "acceptance";
    c.holders.assign(n, agents::AgentConfig{});
    c.threshold = t;
    return c;
}

std::size_t honest_slashed(const agents::ScenarioReport& r) {
    std::size_t count = 0;
    for (const auto& h : r.holders)
        if (h.behavior == agents::Behavior::honest && h.status != chain::HolderStatus::active) ++count;
    for (const auto& s : r.slashes)
        if (r.holders.at(s.holder - 1).behavior == agents::Behavior::honest) ++count;
    return count;
}

// 1 ---------------------------------------------------------------------------

Outcome worked_example_golden() {
    auto grp = group::make_group(group::ToyConfig{23, 11, {}});
    std::vector<KeyPair> keys;
    std::vector<G1Element> pks;
    std::uint32_t i = 1;
    for (std::uint64_t sk : {3, 4, 5, 6}) {
        keys.push_back(core::keypair_from_secret(*grp, sc(sk), i++));
        pks.push_back(keys.back().pk);
    }
    const auto message = as_bytes(std::string_view("worked example"));
    auto req = core::build_request(*grp, sc(22), sc(7), message, 1700000000, pks, 3);

    Check c;
    const std::uint64_t want_pk[] = {20, 13, 5, 9};
    const std::uint64_t want_share[] = {21, 9, 17, 4};
    std::vector<SecretShare> shares;
    for (std::size_t j = 0; j < 4; ++j) {
        c.expect(big_endian(pks[j].bytes()) == want_pk[j], "pk_" + std::to_string(j + 1));
        shares.push_back(core::derive_share(*grp, req, keys[j]));
        c.expect(big_endian(shares[j].value.bytes()) == want_share[j], "s_" + std::to_string(j + 1));
    }
    c.expect(big_endian(req.commitment_a.bytes()) == 7, "g1^r");

    auto poly = core::sharing_polynomial(*grp, sc(22), sc(7), pks, 3);
    std::vector<std::uint64_t> coeffs;
    for (const auto& s : poly.coefficients) coeffs.push_back(u64(s));
    c.expect(coeffs == std::vector<std::uint64_t>{22, 16, 6}, "coefficients");
    c.expect(u64(core::poly_eval(grp->share_field(), poly, sc(3))) == 9, "P(3)");
    c.expect(u64(core::poly_eval(grp->share_field(), poly, sc(4))) == 21, "P(4)");
    c.expect(mask_value(req, 3) == 24, "alpha_3");
    c.expect(mask_value(req, 4) == 17, "alpha_4");

    for (auto subset : {std::vector<std::size_t>{0, 1, 2}, std::vector<std::size_t>{1, 2, 3}}) {
        std::vector<SecretShare> sub;
        for (auto j : subset) sub.push_back(shares[j]);
        c.expect(u64(core::reconstruct_key(*grp, req, sub, pks)) == 22, "reconstruction");
        auto m = core::open_request(*grp, req, sub, pks);
        c.expect(Bytes(message.begin(), message.end()) == m, "decryption");
    }
    return {c.ok(), c.summary("pks (20,13,5,9), g1^r 7, shares (21,9,17,4), P = 22+16x+6x^2, alphas 24/17, k = 22")};
}

// 2 ---------------------------------------------------------------------------

Outcome end_to_end() {
    auto grp = group::make_group(group::ToyConfig{1000003, 2, {}});
    std::mt19937_64 rng(20261016);
    Check c;
    std::uint64_t trials = 0, reconstructions = 0;
    for (std::uint32_t n = 3; n <= 12; ++n) {
        std::vector<KeyPair> keys;
        std::vector<G1Element> pks;
        for (std::uint32_t i = 1; i <= n; ++i) {
            keys.push_back(core::keygen(*grp, mix_seed(n, i) | 1, i));
            pks.push_back(keys.back().pk);
        }
        for (std::uint32_t t = 1; t <= n; ++t) {
            HashDrbg drbg(n * 1000 + t, "acceptance/e2e");
            for (int trial = 0; trial < 100; ++trial, ++trials) {
                auto k = grp->share_field().random_nonzero(drbg);
                auto r = grp->exponents().random_nonzero(drbg);
                Bytes m(rng() % 80);
                for (auto& b : m) b = static_cast<std::uint8_t>(rng());
                auto req = core::build_request(*grp, k, r, m, 0, pks, t);

                std::vector<SecretShare> shares;
                for (const auto& kp : keys) {
                    shares.push_back(core::derive_share(*grp, req, kp));
                    c.expect(core::verify_share(*grp, shares.back(), kp.pk, req) == ShareVerdict::Valid, "verify");
                }
                // The lowest t, the highest t, and one random t-subset.
                std::vector<std::uint32_t> idx(n);
                for (std::uint32_t i = 0; i < n; ++i) idx[i] = i;
                std::vector<std::vector<std::uint32_t>> subsets{{idx.begin(), idx.begin() + t},
                                                                {idx.end() - t, idx.end()}};
                std::shuffle(idx.begin(), idx.end(), rng);
                subsets.emplace_back(idx.begin(), idx.begin() + t);
                for (const auto& s : subsets) {
                    std::vector<SecretShare> sub;
                    for (auto j : s) sub.push_back(shares[j]);
                    c.expect(core::reconstruct_key(*grp, req, sub, pks) == k, "reconstruct");
                    c.expect(core::open_request(*grp, req, sub, pks) == m, "decrypt");
                    ++reconstructions;
                }
            }
        }
    }
    return {c.ok(), c.summary(std::to_string(trials) + " requests over n = 3..12, t = 1..n; " +
                              std::to_string(reconstructions) + " reconstructions, 0 failures")};
}

// 3 ---------------------------------------------------------------------------

Outcome secrecy() {
    auto below = oracle::secrecy_brute_force(23, 4, 3);
    // Control: a coalition of t shares must pin k down. Run over Z_11 to
    // keep the 23^3 view space out of the timed budget.
    auto at = oracle::secrecy_brute_force(11, 4, 3, 3);
    Check c;
    c.expect(below.all_consistent, "a 2-share view excludes some k");
    c.expect(below.views_checked > 0 && below.keys_checked == below.views_checked * 23, "coverage");
    c.expect(!at.all_consistent, "control: 3 shares failed to determine k");
    return {c.ok(), c.summary(std::to_string(below.views_checked) + " two-share views, every one consistent with all 23 keys (" +
                              std::to_string(below.keys_checked) + " pairs); 3-share control over Z_11 determines k")};
}

// 4 ---------------------------------------------------------------------------

Outcome framing() {
    Check c;
    // Prime-order subgroup: p = 47, g = 2 of order 23.
    auto grp = group::make_group(group::ToyConfig{47, 2, 23});
    std::vector<KeyPair> keys;
    std::vector<G1Element> pks;
    for (std::uint32_t i = 1; i <= 4; ++i) {
        keys.push_back(core::keypair_from_secret(*grp, sc(i + 2), i));
        pks.push_back(keys.back().pk);
    }
    const auto msg = as_bytes(std::string_view("framing"));
    std::uint64_t mismatched = 0, matched = 0;
    for (std::uint64_t r = 1; r <= 21; ++r) {
        auto honest_req = core::build_request(*grp, sc(5), sc(r), msg, 0, pks, 3);
        for (std::uint64_t r2 = 1; r2 <= 21; ++r2) {
            auto req = honest_req;
            req.commitment_b = grp->pow(grp->g2(), sc(r2));
            for (const auto& kp : keys) {
                auto v = core::verify_share(*grp, core::derive_share(*grp, req, kp), kp.pk, req);
                if (r == r2) {
                    ++matched;
                    c.expect(v == ShareVerdict::Valid, "matched r rejected");
                } else {
                    ++mismatched;
                    c.expect(v == ShareVerdict::DishonestClient, "mismatch not flagged");
                }
            }
        }
    }

    // Informational: the worked-example group has composite order 22.
    auto small = group::make_group(group::ToyConfig{23, 11, {}});
    std::vector<KeyPair> skeys;
    std::vector<G1Element> spks;
    for (std::uint32_t i = 1; i <= 4; ++i) {
        skeys.push_back(core::keypair_from_secret(*small, sc(i + 2), i));
        spks.push_back(skeys.back().pk);
    }
    std::uint64_t blind = 0, small_mismatched = 0;
    for (std::uint64_t r = 1; r <= 21; ++r) {
        auto base = core::build_request(*small, sc(5), sc(r), msg, 0, spks, 3);
        for (std::uint64_t r2 = 1; r2 <= 21; ++r2) {
            if (r == r2) continue;
            auto req = base;
            req.commitment_b = small->pow(small->g2(), sc(r2));
            for (const auto& kp : skeys) {
                ++small_mismatched;
                if (core::verify_share(*small, core::derive_share(*small, req, kp), kp.pk, req) == ShareVerdict::Valid)
                    ++blind;
            }
        }
    }

    auto cfg = honest_config(4, 3);
    cfg.client.behavior = agents::Behavior::framing_client;
    std::uint64_t seeds = 0, client_faults = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed, ++seeds) {
        auto rep = agents::run_scenario(cfg, seed);
        c.expect(honest_slashed(rep) == 0, "honest holder slashed, seed " + std::to_string(seed));
        for (const auto& d : rep.disputes) client_faults += d.outcome == chain::DisputeOutcome::ClientFault ? 1 : 0;
    }
    c.expect(client_faults > 0, "framing scenarios never raised a client fault");
    return {c.ok(), c.summary(std::to_string(mismatched) + "/" + std::to_string(mismatched) +
                              " mismatched verdicts DishonestClient, " + std::to_string(matched) + "/" +
                              std::to_string(matched) + " matched Valid (order 23); 0 honest slashed in " +
                              std::to_string(seeds) + " framing seeds (" + std::to_string(client_faults) +
                              " client faults); note: composite order 22 passes " + std::to_string(blind) + "/" +
                              std::to_string(small_mismatched) + " mismatched triples")};
}

// 5 ---------------------------------------------------------------------------

Outcome clock_failsafe() {
    Check c;
    auto cfg = honest_config(4, 3);
    cfg.proposers = agents::ProposerConfig{4, 1};
    std::int64_t min_ref = INT64_MAX, min_chain = INT64_MAX;
    std::uint64_t reveals = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        auto rep = agents::run_scenario(cfg, seed);
        for (const auto& r : rep.requests) {
            c.expect(r.reveal_time.has_value(), "no reveal, seed " + std::to_string(seed));
            if (!r.reveal_time) continue;
            ++reveals;
            min_ref = std::min(min_ref, *r.reveal_reference_time - r.requested_time);
            min_chain = std::min(min_chain, *r.reveal_time - r.requested_time);
            c.expect(*r.reveal_reference_time >= r.requested_time - 15, "reference time more than 15 s early");
            c.expect(*r.reveal_time >= r.requested_time, "chain time before decrypt time");
        }
        c.expect(honest_slashed(rep) == 0, "honest holder slashed");
    }
    cfg.proposers = agents::ProposerConfig{4, 0};
    std::int64_t min_honest = INT64_MAX;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        for (const auto& r : agents::run_scenario(cfg, seed).requests) {
            c.expect(r.reveal_time.has_value(), "no reveal (honest proposers)");
            if (!r.reveal_time) continue;
            min_honest = std::min(min_honest, *r.reveal_time - r.requested_time);
            c.expect(*r.reveal_time >= r.requested_time, "honest proposers revealed early");
        }
    }
    return {c.ok(), c.summary("adversarial proposer: " + std::to_string(reveals) +
                              " reveals, min (true time - decrypt) " + std::to_string(min_ref) +
                              " s, min (block time - decrypt) " + std::to_string(min_chain) +
                              " s; honest proposers: min " + std::to_string(min_honest) + " s")};
}

// 6 ---------------------------------------------------------------------------

Outcome workflow() {
    Check c;
    auto honest_quorum = agents::scenario_from_json(load_json("scenarios/honest_quorum.json"));
    auto early_submitter = agents::scenario_from_json(load_json("scenarios/early_submitter.json"));
    std::uint32_t early = 0;
    for (std::uint32_t i = 0; i < early_submitter.n(); ++i)
        if (early_submitter.holders[i].behavior == agents::Behavior::early_submitter) early = i + 1;
    c.expect(early != 0, "early_submitter has no early submitter");

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto run = agents::run_scenario_with_log(honest_quorum, seed);
        auto again = agents::run_scenario_with_log(honest_quorum, seed);
        c.expect(run.ledger_log == again.ledger_log, "honest_quorum not deterministic");
        auto ledger = chain::Ledger::replay(run.ledger_log);
        c.expect(ledger.state_hash() == run.report.state_hash, "honest_quorum replay");
        for (const auto& out : run.report.requests) {
            c.expect(out.reconstructed, "honest_quorum did not reconstruct");
            auto subs = ledger.submissions_for(out.request_id);
            c.expect(subs.size() == 4, "honest_quorum expected 4 submissions");
            std::set<std::uint32_t> first3;
            for (std::size_t j = 0; j < subs.size() && j < 3; ++j) first3.insert(subs[j]->holder_index);
            std::set<std::uint32_t> paid;
            for (const auto& h : run.report.holders)
                if (h.rewards > 0) paid.insert(h.index);
            c.expect(paid == first3, "honest_quorum paid set is not the first three submitters, seed " + std::to_string(seed));
        }

        auto b = agents::run_scenario_with_log(early_submitter, seed);
        c.expect(b.ledger_log == agents::run_scenario_with_log(early_submitter, seed).ledger_log, "early_submitter not deterministic");
        c.expect(b.report.slashes.size() == 1 && b.report.slashes[0].holder == early &&
                     b.report.slashes[0].reason == "early",
                 "early_submitter slashes, seed " + std::to_string(seed));
        for (const auto& h : b.report.holders)
            c.expect((h.index == early) == (h.status != chain::HolderStatus::active), "early_submitter holder status");
        for (const auto& out : b.report.requests) c.expect(out.reconstructed, "early_submitter did not reconstruct");
    }
    return {c.ok(), c.summary("20 seeds each: honest_quorum pays exactly the first 3 of 4 submitters; early_submitter slashes only holder " +
                              std::to_string(early) + " and reconstructs; reruns byte-identical")};
}

// 7 ---------------------------------------------------------------------------

Outcome scalability() {
    Check c;
    auto j = load_json("scenarios/sweep.json");
    auto cfg = agents::scenario_from_json(j);
    auto n_list = j.at("scalability").at("n_list").get<std::vector<std::uint32_t>>();
    c.expect(n_list == std::vector<std::uint32_t>{3, 10, 20, 30, 40}, "n_list");
    auto points = agents::scalability_sweep(cfg, n_list, 1);
    std::vector<double> t, work, publish;
    for (const auto& p : points) {
        t.push_back(p.threshold);
        work.push_back(p.verifications_per_holder);
        publish.push_back(p.publish_latency_s);
    }
    const double r2 = agents::linear_fit_r2(t, work);
    const auto [lo, hi] = std::minmax_element(publish.begin(), publish.end());
    const double ratio = *hi / *lo;
    c.expect(r2 >= 0.9, "R^2 " + fmt("%.4f", r2));
    c.expect(*lo > 0 && ratio < 2.0, "publish ratio " + fmt("%.3f", ratio));
    return {c.ok(), c.summary("verification work vs t R^2 = " + fmt("%.4f", r2) + "; publish latency " +
                              fmt("%.2f", *lo) + ".." + fmt("%.2f", *hi) + " s (ratio " + fmt("%.3f", ratio) + ")")};
}

// 8 ---------------------------------------------------------------------------

oracle::OracleRule oracle_rule(voting::Rule r) {
    switch (r) {
        case voting::Rule::plurality: return oracle::OracleRule::plurality;
        case voting::Rule::borda_truncated: return oracle::OracleRule::borda_truncated;
        case voting::Rule::irv: return oracle::OracleRule::irv;
    }
    return oracle::OracleRule::plurality;
}

voting::PreferenceProfile to_profile(const oracle::Electorate& e) {
    voting::PreferenceProfile p{e.k, {}, {}};
    for (const auto& v : e.voters) p.ballots.push_back(voting::Ballot{v, 1});
    return p;
}

oracle::Electorate expand(const voting::PreferenceProfile& p) {
    oracle::Electorate e{p.alternatives, {}};
    for (const auto& b : p.ballots)
        for (std::uint64_t w = 0; w < b.weight; ++w) e.voters.push_back(b.order);
    return e;
}

Outcome voting_equivalence() {
    Check c;
    c.expect(voting::malicious_transform({5, 1, 3, 2, 4}, {3, 4, 5, 2, 1}) == voting::Order{5, 1, 2},
             "worked transformation");

    std::vector<voting::PreferenceProfile> profiles;
    for (std::uint64_t n = 2; n <= 10; ++n)
        for (std::uint64_t s = 0; s < 2; ++s)
            profiles.push_back(to_profile(oracle::random_electorate(mix_seed(n, s), n, 3 + (n + s) % 3)));
    std::ifstream fixture(std::string(TRC_SOURCE_DIR) + "/tests/fixtures/n9.soi");
    std::stringstream text;
    text << fixture.rdbuf();
    profiles.push_back(voting::parse_ballot_file(text.str()));

    std::uint64_t rows = 0, subsets = 0, iterations = 0;
    for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
        const auto& p = profiles[pi];
        const auto ex = expand(p);
        const auto n = ex.voters.size();
        for (auto rule : {voting::Rule::plurality, voting::Rule::borda_truncated, voting::Rule::irv}) {
            for (std::uint32_t l = 1; l <= 100; ++l, ++rows) {
                const auto m = voting::malicious_count(n, l);
                auto truth = oracle::oracle_enumerate(ex, m, oracle_rule(rule));
                auto exact = voting::exact_probability(p, l, rule);
                subsets += truth.subsets;
                c.expect(exact.iterations == truth.subsets && exact.changes == truth.changes,
                         "exact enumeration, profile " + std::to_string(pi) + " l " + std::to_string(l));
                voting::simulate(p, l, 10, rule, mix_seed(pi, l), [&](std::span<const std::uint64_t> mal, bool changed) {
                    std::vector<bool> flags(n, false);
                    for (auto v : mal) flags[v] = true;
                    ++iterations;
                    c.expect(mal.size() == m, "sample size");
                    c.expect(changed == oracle::oracle_changes(ex, flags, oracle_rule(rule)),
                             "simulated iteration, profile " + std::to_string(pi));
                });
            }
        }
    }
    return {c.ok(), c.summary(std::to_string(profiles.size()) + " profiles (N <= 10, incl. fixture), " +
                              std::to_string(rows) + " (rule, l) rows: exact counts match " +
                              std::to_string(subsets) + " enumerated subsets, " + std::to_string(iterations) +
                              " simulated iterations match per subset; <5,1,3,2,4> -> <5,1,2>")};
}

// 9 ---------------------------------------------------------------------------

Outcome ledger_conservation() {
    Check c;
    std::uint64_t txs = 0;
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        auto ledger = oracle::fuzz_ledger(seed, 1000, [&](const chain::Ledger& l, const chain::Receipt&) {
            ++txs;
            const auto& a = l.accounts();
            c.expect(a.balanced(), "accounts unbalanced");
            std::int64_t escrow = 0;
            for (const auto& [id, rec] : l.requests()) escrow += rec.escrow;
            c.expect(escrow == a.escrow, "escrow sum differs from ledger total");
        });
        c.expect(ledger.log().size() == 1000, "log length");
        const auto log = ledger.export_log();
        c.expect(chain::Ledger::replay(log).state_hash() == ledger.state_hash(), "replay hash");
        // Control: a truncated log must not replay.
        bool rejected = false;
        try {
            chain::Ledger::replay(log.substr(0, log.rfind("{\"end\"")));
        } catch (const Error&) {
            rejected = true;
        }
        c.expect(rejected, "truncated log replayed");
    }
    return {c.ok(), c.summary("5 random streams x 1000 transactions: balanced after all " + std::to_string(txs) +
                              ", replay hashes bit-identical, truncated log rejected")};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0 = no runtime bound
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "worked example golden values", 1.0, worked_example_golden},
        {2, "end-to-end build/verify/reconstruct/decrypt", 60.0, end_to_end},
        {3, "secrecy below threshold", 10.0, secrecy},
        {4, "framing resistance", 0, framing},
        {5, "clock fail-safe", 0, clock_failsafe},
        {6, "workflow fidelity", 0, workflow},
        {7, "scalability shape", 0, scalability},
        {8, "voting oracle equivalence", 0, voting_equivalence},
        {9, "ledger conservation and replay", 0, ledger_conservation},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = cr.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.limit_s > 0 && secs >= cr.limit_s) {
            out.ok = false;
            out.detail += "; runtime " + fmt("%.2f", secs) + " s exceeds " + fmt("%.0f", cr.limit_s) + " s";
        }
        failed += out.ok ? 0 : 1;
        std::printf("%s criterion %d (%s): %s [%.2f s]\n", out.ok ? "PASS" : "FAIL", cr.id, cr.name,
                    out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
