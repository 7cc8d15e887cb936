// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

// Brute-force voting reference. Works on the weight-expanded electorate and
// recomputes every score from scratch; shares no code with trc_voting.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace trc::testing {

using Ranking = std::vector<std::uint32_t>;

struct Electorate {
    std::uint32_t k = 0;
    std::vector<Ranking> voters;  // one entry per voter
};

enum class OracleRule { plurality, borda_truncated, irv };

inline Ranking oracle_order_by_score(const std::map<std::uint32_t, long long>& score, std::uint32_t k) {
    std::vector<std::pair<long long, std::uint32_t>> keyed;
    for (std::uint32_t a = 1; a <= k; ++a) {
        auto it = score.find(a);
        keyed.emplace_back(-(it == score.end() ? 0 : it->second), a);
    }
    std::sort(keyed.begin(), keyed.end());
    Ranking out;
    for (const auto& [s, a] : keyed) out.push_back(a);
    return out;
}

inline Ranking oracle_irv(const std::vector<Ranking>& voters, std::uint32_t k) {
    std::set<std::uint32_t> remaining;
    for (std::uint32_t a = 1; a <= k; ++a) remaining.insert(a);
    Ranking out_reversed;
    while (remaining.size() > 1) {
        std::map<std::uint32_t, long long> tally;
        for (auto a : remaining) tally[a] = 0;
        for (const auto& v : voters) {
            auto it = std::find_if(v.begin(), v.end(), [&](std::uint32_t a) { return remaining.count(a) > 0; });
            if (it != v.end()) ++tally[*it];
        }
        // Lowest tally leaves; among equals the largest id leaves.
        std::pair<long long, std::uint32_t> worst{tally.begin()->second, tally.begin()->first};
        for (const auto& [a, t] : tally)
            if (t < worst.first || (t == worst.first && a > worst.second)) worst = {t, a};
        remaining.erase(worst.second);
        out_reversed.push_back(worst.second);
    }
    out_reversed.push_back(*remaining.begin());
    return Ranking(out_reversed.rbegin(), out_reversed.rend());
}

inline Ranking oracle_ranking(const std::vector<Ranking>& voters, std::uint32_t k, OracleRule rule) {
    if (rule == OracleRule::irv) return oracle_irv(voters, k);
    std::map<std::uint32_t, long long> score;
    for (const auto& v : voters) {
        if (rule == OracleRule::plurality) {
            score[v.front()] += 1;
        } else {
            for (std::size_t j = 0; j < v.size(); ++j) score[v[j]] += static_cast<long long>(k) - 1 - static_cast<long long>(j);
        }
    }
    return oracle_order_by_score(score, k);
}

// Keep an alternative unless the aggregate places it before the voter's
// own first choice.
inline Ranking oracle_transform(const Ranking& ballot, const Ranking& aggregate) {
    auto rank_of = [&](std::uint32_t a) { return std::find(aggregate.begin(), aggregate.end(), a) - aggregate.begin(); };
    const auto first_rank = rank_of(ballot.front());
    Ranking out;
    for (auto a : ballot)
        if (rank_of(a) >= first_rank) out.push_back(a);
    return out;
}

inline bool oracle_changes(const Electorate& e, const std::vector<bool>& malicious, OracleRule rule) {
    std::vector<Ranking> sincere;
    for (std::size_t v = 0; v < e.voters.size(); ++v)
        if (!malicious[v]) sincere.push_back(e.voters[v]);
    const auto agg = oracle_ranking(sincere, e.k, rule);
    auto all = sincere;
    for (std::size_t v = 0; v < e.voters.size(); ++v)
        if (malicious[v]) all.push_back(oracle_transform(e.voters[v], agg));
    return oracle_ranking(all, e.k, rule).front() != agg.front();
}

struct OracleCount {
    std::uint64_t subsets = 0;
    std::uint64_t changes = 0;
};

// Every subset of exactly m voters, by bitmask. N must stay small.
inline OracleCount oracle_enumerate(const Electorate& e, std::uint64_t m, OracleRule rule) {
    const std::size_t n = e.voters.size();
    OracleCount c;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) != m) continue;
        std::vector<bool> mal(n);
        for (std::size_t v = 0; v < n; ++v) mal[v] = (mask >> v) & 1;
        ++c.subsets;
        c.changes += oracle_changes(e, mal, rule) ? 1 : 0;
    }
    return c;
}

// Random strict, possibly truncated ballots over k alternatives.
inline Electorate random_electorate(std::uint64_t seed, std::size_t n, std::uint32_t k) {
    std::mt19937_64 rng(seed);
    Electorate e{k, {}};
    for (std::size_t v = 0; v < n; ++v) {
        Ranking r(k);
        for (std::uint32_t a = 0; a < k; ++a) r[a] = a + 1;
        std::shuffle(r.begin(), r.end(), rng);
        r.resize(1 + rng() % k);
        e.voters.push_back(r);
    }
    return e;
}

}  // namespace trc::testing
