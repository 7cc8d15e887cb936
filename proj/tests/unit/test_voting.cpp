// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <random>

#include "support/voting_oracle.hpp"
#include "trc/common/drbg.hpp"
#include "trc/voting/voting.hpp"

using namespace trc;
using namespace trc::voting;
using trc::testing::Electorate;
using trc::testing::OracleRule;

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

std::size_t parse_line_of(std::string_view text) {
    try {
        parse_ballot_file(text);
    } catch (const ParseFailure& e) {
        return e.line();
    }
    FAIL("expected ParseFailure");
    return 0;
}

PreferenceProfile profile(std::uint32_t k, std::vector<Ballot> ballots) {
    return PreferenceProfile{k, {}, std::move(ballots)};
}

// Merges identical adjacent voters into weighted ballots.
PreferenceProfile to_profile(const Electorate& e) {
    PreferenceProfile p{e.k, {}, {}};
    for (const auto& v : e.voters) {
        if (!p.ballots.empty() && p.ballots.back().order == v) ++p.ballots.back().weight;
        else p.ballots.push_back(Ballot{v, 1});
    }
    return p;
}

Electorate expand(const PreferenceProfile& p) {
    Electorate e{p.alternatives, {}};
    for (const auto& b : p.ballots)
        for (std::uint64_t w = 0; w < b.weight; ++w) e.voters.push_back(b.order);
    return e;
}

OracleRule oracle(Rule r) {
    switch (r) {
        case Rule::plurality: return OracleRule::plurality;
        case Rule::borda_truncated: return OracleRule::borda_truncated;
        case Rule::irv: return OracleRule::irv;
    }
    return OracleRule::plurality;
}

constexpr Rule kRules[] = {Rule::plurality, Rule::borda_truncated, Rule::irv};

// Random profile with duplicated ballots, so weights above one occur.
Electorate clustered(std::uint64_t seed, std::size_t n, std::uint32_t k) {
    auto pool = testing::random_electorate(seed, 3, k);
    std::mt19937_64 rng(seed ^ 0x5bd1e995);
    Electorate e{k, {}};
    for (std::size_t v = 0; v < n; ++v) e.voters.push_back(pool.voters[rng() % 3]);
    std::sort(e.voters.begin(), e.voters.end());
    return e;
}

}  // namespace

TEST_CASE("ballot files parse with weights and names") {
    auto p = parse_ballot_file("# NUMBER ALTERNATIVES: 3\n2: 1,3\n1: 2\n");
    CHECK(p.alternatives == 3);
    CHECK(p.voters() == 3);
    REQUIRE(p.ballots.size() == 2);
    CHECK(p.ballots[0] == Ballot{{1, 3}, 2});
    CHECK(p.ballots[1] == Ballot{{2}, 1});
    CHECK(p.names.empty());

    auto named = parse_ballot_file(
        "# FILE NAME: demo.soi\n"
        "# NUMBER ALTERNATIVES: 2\n"
        "# ALTERNATIVE NAME 1: Ada\n"
        "# ALTERNATIVE NAME 2: Grace Hopper\n"
        "# NUMBER VOTERS: 5\n"
        "# NUMBER UNIQUE ORDERS: 2\n"
        "\n"
        "3: 2, 1\r\n"
        "2:1\n");
    CHECK(named.names == std::vector<std::string>{"Ada", "Grace Hopper"});
    CHECK(named.ballots[0] == Ballot{{2, 1}, 3});
    CHECK(named.voters() == 5);
}

TEST_CASE("ballot parse errors carry the line number") {
    CHECK(error_of([] { parse_ballot_file("# NUMBER ALTERNATIVES: 3\n1: 2,2\n"); }) ==
          Errc::DuplicateAlternativeInBallot);
    CHECK(parse_line_of("# NUMBER ALTERNATIVES: 3\n1: 1\nx: 2\n") == 3);
    CHECK(parse_line_of("# NUMBER ALTERNATIVES: 3\n0: 1\n") == 2);
    CHECK(parse_line_of("# NUMBER ALTERNATIVES: 3\n1: 1,4\n") == 2);
    CHECK(parse_line_of("# NUMBER ALTERNATIVES: 3\n1: {1,2},3\n") == 2);
    CHECK(parse_line_of("# NUMBER ALTERNATIVES: 3\n\n1: 1,,2\n") == 3);
    CHECK(parse_line_of("# NUMBER ALTERNATIVES: 3\n1:\n") == 2);
    CHECK(parse_line_of("1: 1\n") == 1);
    CHECK(parse_line_of("# NUMBER ALTERNATIVES: three\n") == 1);
    CHECK(parse_line_of("# NUMBER ALTERNATIVES: 3\n# NUMBER VOTERS: 4\n1: 1\n") == 2);
    CHECK(parse_line_of("# NUMBER ALTERNATIVES: 3\n1: 1\n# NUMBER UNIQUE ORDERS: 2\n") == 3);
    CHECK(error_of([] { parse_ballot_file(""); }) == Errc::ParseError);
}

TEST_CASE("serialize is idempotent on normalized profiles") {
    const std::string raw =
        "# NUMBER ALTERNATIVES: 4\n# ALTERNATIVE NAME 3: C\n1: 2,1\n3: 4\n2: 2,1\n1: 1,2,3,4\n";
    auto once = serialize(parse_ballot_file(raw));
    CHECK(serialize(parse_ballot_file(once)) == once);
    CHECK(once ==
          "# NUMBER ALTERNATIVES: 4\n# ALTERNATIVE NAME 3: C\n# NUMBER VOTERS: 7\n# NUMBER UNIQUE ORDERS: 3\n"
          "3: 2,1\n3: 4\n1: 1,2,3,4\n");
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto p = to_profile(clustered(seed, 20, 5));
        auto text = serialize(p);
        auto back = parse_ballot_file(text);
        CHECK(back.voters() == p.voters());
        CHECK(serialize(back) == text);
        for (auto r : kRules) CHECK(aggregate_ranking(back, r) == aggregate_ranking(p, r));
    }
}

TEST_CASE("winner follows the rules and breaks ties by lowest id") {
    CHECK(winner(profile(2, {{{1}, 2}, {{2}, 1}})) == 1);
    CHECK(winner(profile(2, {{{1}, 1}, {{2}, 1}})) == 1);
    CHECK(winner(profile(2, {{{2}, 1}, {{1}, 1}})) == 1);
    CHECK(error_of([] { winner(profile(3, {})); }) == Errc::EmptyProfile);
    CHECK(error_of([] { winner(profile(3, {{{1, 1}, 1}})); }) == Errc::DuplicateAlternativeInBallot);
    CHECK(error_of([] { winner(profile(3, {{{4}, 1}})); }) == Errc::InvalidArgument);

    // First-choice counts k3 > k4 > k5 > k2 > k1 over 80 voters.
    auto eighty = profile(5, {{{3, 4}, 30}, {{4, 3}, 20}, {{5, 1}, 15}, {{2}, 10}, {{1, 5}, 5}});
    CHECK(eighty.voters() == 80);
    CHECK(aggregate_ranking(eighty) == Order{3, 4, 5, 2, 1});
    CHECK(winner(eighty) == 3);

    // A single ballot lists unranked alternatives last, by id.
    auto single = profile(4, {{{3, 1}, 1}});
    for (auto r : kRules) CHECK(aggregate_ranking(single, r) == Order{3, 1, 2, 4});
}

TEST_CASE("borda_truncated and irv against hand-computed fixtures") {
    // K=4, points 3/2/1/0 by position: 1 -> 3, 2 -> 2+6, 3 -> 1+3, 4 -> 4.
    auto p = profile(4, {{{1, 2, 3}, 1}, {{2, 4}, 2}, {{3}, 1}});
    CHECK(aggregate_ranking(p, Rule::borda_truncated) == Order{2, 3, 4, 1});

    // Tallies 1:4 2:3 3:2; 3 goes, its ballots move to 2, so 2 wins 5-4.
    auto q = profile(3, {{{1}, 4}, {{2}, 3}, {{3, 2}, 2}});
    CHECK(aggregate_ranking(q, Rule::plurality) == Order{1, 2, 3});
    CHECK(aggregate_ranking(q, Rule::irv) == Order{2, 1, 3});
    CHECK(winner(q, Rule::irv) == 2);

    CHECK(rule_from_string("irv") == Rule::irv);
    CHECK(error_of([] { rule_from_string("condorcet"); }) == Errc::InvalidArgument);
}

TEST_CASE("rankings agree with the brute-force oracle", "[property]") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto e = testing::random_electorate(seed, 1 + seed % 15, 2 + seed % 5);
        auto p = to_profile(e);
        for (auto r : kRules) CHECK(aggregate_ranking(p, r) == testing::oracle_ranking(e.voters, e.k, oracle(r)));
    }
}

TEST_CASE("malicious_transform") {
    CHECK(malicious_transform({5, 1, 3, 2, 4}, {3, 4, 5, 2, 1}) == Order{5, 1, 2});
    CHECK(malicious_transform({3, 1, 2}, {3, 4, 5, 2, 1}) == Order{3, 1, 2});
    CHECK(malicious_transform({4}, {3, 4, 5, 2, 1}) == Order{4});

    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        auto e = testing::random_electorate(rng(), 2, 6);
        Order agg(6);
        std::iota(agg.begin(), agg.end(), 1u);
        std::shuffle(agg.begin(), agg.end(), rng);
        const auto& truth = e.voters[0];
        auto out = malicious_transform(truth, agg);
        REQUIRE_FALSE(out.empty());
        CHECK(out.front() == truth.front());
        // Survivors keep their relative order.
        std::size_t j = 0;
        for (auto a : truth)
            if (j < out.size() && out[j] == a) ++j;
        CHECK(j == out.size());
        CHECK(out == testing::oracle_transform(truth, agg));
    }
}

TEST_CASE("winner is invariant under ballot order and weight splitting", "[property]") {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto p = to_profile(clustered(seed, 12, 4));
        auto shuffled = p;
        std::shuffle(shuffled.ballots.begin(), shuffled.ballots.end(), rng);
        PreferenceProfile split{p.alternatives, {}, {}};
        for (const auto& b : p.ballots)
            for (std::uint64_t w = 0; w < b.weight; ++w) split.ballots.push_back(Ballot{b.order, 1});
        for (auto r : kRules) {
            CHECK(winner(shuffled, r) == winner(p, r));
            CHECK(winner(split, r) == winner(p, r));
        }
    }
}

TEST_CASE("simulate basics") {
    auto p = to_profile(clustered(3, 100, 5));
    CHECK(malicious_count(100, 80) == 20);
    CHECK(malicious_count(9, 50) == 4);
    CHECK(malicious_count(7, 100) == 0);
    CHECK(malicious_count(266, 1) == 263);

    auto r = simulate(p, 100, 100, Rule::plurality, 1);
    CHECK(r.changes == 0);
    CHECK(r.probability == 0);
    CHECK(error_of([&] { simulate(p, 0, 10, Rule::plurality, 1); }) == Errc::BadPercent);
    CHECK(error_of([&] { simulate(p, 101, 10, Rule::plurality, 1); }) == Errc::BadPercent);

    std::size_t calls = 0;
    auto a = simulate(p, 80, 100, Rule::plurality, 9, [&](std::span<const std::uint64_t> mal, bool) {
        ++calls;
        CHECK(mal.size() == 20);
        CHECK(std::is_sorted(mal.begin(), mal.end()));
        CHECK(std::adjacent_find(mal.begin(), mal.end()) == mal.end());
    });
    CHECK(calls == 100);
    CHECK(a.iterations == 100);
    CHECK(a.probability == static_cast<double>(a.changes) / 100.0);
    auto b = simulate(p, 80, 100, Rule::plurality, 9);
    CHECK(a.changes == b.changes);
}

TEST_CASE("simulate and exact enumeration match the subset oracle", "[oracle]") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const std::size_t n = seed % 2 ? 9 : 10;
        auto e = seed % 3 == 0 ? testing::random_electorate(seed, n, 3) : clustered(seed, n, 3 + seed % 2);
        auto p = to_profile(e);
        auto ex = expand(p);
        for (auto rule : kRules) {
            for (std::uint32_t l = 1; l <= 100; ++l) {
                const auto m = malicious_count(n, l);
                auto truth = testing::oracle_enumerate(ex, m, oracle(rule));
                auto exact = exact_probability(p, l, rule);
                CHECK(exact.iterations == truth.subsets);
                CHECK(exact.changes == truth.changes);

                auto sim = simulate(p, l, 20, rule, mix_seed(seed, l), [&](std::span<const std::uint64_t> mal, bool c) {
                    std::vector<bool> flags(n, false);
                    for (auto v : mal) flags[v] = true;
                    CHECK(c == testing::oracle_changes(ex, flags, oracle(rule)));
                });
                if (truth.changes == 0) CHECK(sim.changes == 0);
                if (truth.changes == truth.subsets) CHECK(sim.changes == sim.iterations);
            }
        }
    }
}

TEST_CASE("simulate converges to the exact probability") {
    auto p = to_profile(clustered(11, 10, 3));
    for (std::uint32_t l : {20u, 50u, 70u}) {
        auto exact = exact_probability(p, l, Rule::plurality);
        auto sim = simulate(p, l, 4000, Rule::plurality, 3);
        const double q = exact.probability;
        CHECK(std::abs(sim.probability - q) <= 5 * std::sqrt(q * (1 - q) / 4000) + 1e-12);
    }
}

TEST_CASE("sweep emits 100 rows independent of thread count") {
    // 55 voters prefer 1, 45 prefer 2: a tiny sincere sample often disagrees.
    auto polar = profile(3, {{{1, 3, 2}, 55}, {{2, 3, 1}, 45}});
    auto rows = sweep(polar, Rule::plurality, 42, 100, 1);
    REQUIRE(rows.size() == 100);
    for (std::uint32_t l = 1; l <= 100; ++l) CHECK(rows[l - 1].l == l);
    CHECK(rows.back().changes == 0);
    auto parallel = sweep(polar, Rule::plurality, 42, 100, 8);
    for (std::size_t i = 0; i < 100; ++i) CHECK(parallel[i].changes == rows[i].changes);
    CHECK(rows[0].changes == simulate(polar, 1, 100, Rule::plurality, mix_seed(42, 1)).changes);

    double low = 0, high = 0;
    for (int i = 0; i < 20; ++i) {
        low += rows[i].probability;
        high += rows[80 + i].probability;
    }
    CHECK(low >= high);
    CHECK(low > 0);

    auto csv = sweep_csv(rows);
    CHECK(csv.rfind("l,iterations,changes,probability\n1,100,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);
    CHECK(csv.find("\n100,100,0,0.000000\n") != std::string::npos);
}
