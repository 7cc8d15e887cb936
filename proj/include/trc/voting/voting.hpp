// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trc/common/errors.hpp"

namespace trc::voting {

using Alt = std::uint32_t;  // 1-based alternative id
using Order = std::vector<Alt>;

struct Ballot {
    Order order;  // strict, possibly truncated
    std::uint64_t weight = 1;

    friend bool operator==(const Ballot&, const Ballot&) = default;
};

struct PreferenceProfile {
    std::uint32_t alternatives = 0;
    std::vector<std::string> names;  // index id-1; may be empty
    std::vector<Ballot> ballots;

    std::uint64_t voters() const;
    friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;
};

// Throws EmptyProfile, InvalidArgument for ids outside 1..K,
// DuplicateAlternativeInBallot.
void validate(const PreferenceProfile& profile);

// ParseError that remembers the offending 1-based line.
class ParseFailure : public Error {
public:
    ParseFailure(std::size_t line, const std::string& what)
        : Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Strict-order ballot text; grammar in README. Throws ParseFailure,
// DuplicateAlternativeInBallot.
PreferenceProfile parse_ballot_file(std::string_view text);

// Canonical text: identical orders merged, sorted by descending weight
// then lexicographic order.
std::string serialize(const PreferenceProfile& profile);

enum class Rule { plurality, borda_truncated, irv };
std::string_view to_string(Rule r) noexcept;
Rule rule_from_string(std::string_view s);  // InvalidArgument

// Every alternative, best first, ties by lowest id. Throws EmptyProfile.
//  plurality        first-choice weight
//  borda_truncated  K-1-j points for position j, unranked score 0
//  irv              reverse elimination order; the lowest first-choice
//                   tally is eliminated each round, ties eliminate the
//                   highest id, exhausted ballots drop out
Order aggregate_ranking(const PreferenceProfile& profile, Rule rule = Rule::plurality);
Alt winner(const PreferenceProfile& profile, Rule rule = Rule::plurality);

// Drops every alternative ranked strictly above the voter's first choice
// in `sincere_aggregate`; survivors keep their order.
Order malicious_transform(const Order& true_ballot, const Order& sincere_aggregate);

struct SimResult {
    std::uint32_t l = 0;
    std::uint64_t iterations = 0;
    std::uint64_t changes = 0;
    double probability = 0;
};

// floor((100 - l) * N / 100), the malicious head count.
std::uint64_t malicious_count(std::uint64_t voters, std::uint32_t l);

// Called once per iteration with the sorted malicious voter indices
// (0-based over the weight-expanded electorate) and whether the winner moved.
using IterationObserver = std::function<void(std::span<const std::uint64_t>, bool)>;

// Iteration i samples with a generator seeded by mix_seed(seed, i).
// Throws BadPercent unless 1 <= l <= 100, EmptyProfile.
SimResult simulate(const PreferenceProfile& profile, std::uint32_t l, std::uint64_t iterations, Rule rule,
                   std::uint64_t seed, const IterationObserver& observe = {});

// Whether the winner changes when exactly `malicious` (sorted voter
// indices) vote strategically.
bool winner_changes(const PreferenceProfile& profile, std::span<const std::uint64_t> malicious, Rule rule);

// Enumerates every malicious subset of the right size. Exponential: intended
// for N <= 20. `iterations` holds the subset count.
SimResult exact_probability(const PreferenceProfile& profile, std::uint32_t l, Rule rule);

// l = 1..100; row l uses seed mix_seed(seed, l). Rows run on `threads`
// workers (0 = hardware concurrency) and are returned in order.
std::vector<SimResult> sweep(const PreferenceProfile& profile, Rule rule, std::uint64_t seed,
                             std::uint64_t iterations = 100, unsigned threads = 0);
std::string sweep_csv(std::span<const SimResult> rows);

}  // namespace trc::voting
