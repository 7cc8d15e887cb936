// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/voting/voting.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "trc/common/drbg.hpp"

namespace trc::voting {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
bool parse_uint(std::string_view s, T& out) {
    s = trim(s);
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

void check_order(const Order& order, std::uint32_t k, const std::string& where) {
    if (order.empty()) fail(Errc::InvalidArgument, where + "empty ballot");
    std::vector<bool> seen(k + 1, false);
    for (auto a : order) {
        if (a < 1 || a > k) fail(Errc::InvalidArgument, where + "alternative " + std::to_string(a) + " out of range");
        if (seen[a])
            fail(Errc::DuplicateAlternativeInBallot, where + "alternative " + std::to_string(a) + " listed twice");
        seen[a] = true;
    }
}

// A weighted ballot view, so sub-profiles need no copies.
struct Weighted {
    const Order* order;
    std::uint64_t weight;
};

Order ranking_from_scores(const std::vector<std::int64_t>& score, std::uint32_t k) {
    Order out(k);
    std::iota(out.begin(), out.end(), 1u);
    std::stable_sort(out.begin(), out.end(), [&](Alt a, Alt b) { return score[a] > score[b]; });
    return out;
}

std::int64_t points(Rule rule, std::uint32_t k, std::size_t position) {
    if (rule == Rule::plurality) return position == 0 ? 1 : 0;
    return static_cast<std::int64_t>(k) - 1 - static_cast<std::int64_t>(position);
}

void add_scores(std::vector<std::int64_t>& score, Rule rule, std::uint32_t k, const Order& order, std::int64_t w) {
    const std::size_t len = rule == Rule::plurality ? std::min<std::size_t>(1, order.size()) : order.size();
    for (std::size_t j = 0; j < len; ++j) score[order[j]] += w * points(rule, k, j);
}

Order irv_ranking(std::span<const Weighted> ballots, std::uint32_t k) {
    std::vector<bool> active(k + 1, true);
    active[0] = false;
    Order eliminated;
    for (std::uint32_t round = 1; round < k; ++round) {
        std::vector<std::uint64_t> tally(k + 1, 0);
        for (const auto& b : ballots)
            for (auto a : *b.order)
                if (active[a]) {
                    tally[a] += b.weight;
                    break;
                }
        Alt loser = 0;
        for (Alt a = k; a >= 1; --a)
            if (active[a] && (loser == 0 || tally[a] < tally[loser])) loser = a;
        active[loser] = false;
        eliminated.push_back(loser);
    }
    for (Alt a = 1; a <= k; ++a)
        if (active[a]) eliminated.push_back(a);
    std::reverse(eliminated.begin(), eliminated.end());
    return eliminated;
}

Order ranking(std::span<const Weighted> ballots, std::uint32_t k, Rule rule) {
    if (rule == Rule::irv) return irv_ranking(ballots, k);
    std::vector<std::int64_t> score(k + 1, 0);
    for (const auto& b : ballots) add_scores(score, rule, k, *b.order, static_cast<std::int64_t>(b.weight));
    return ranking_from_scores(score, k);
}

// Unbiased draw from [0, n).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % n;
}

void check_percent(std::uint32_t l) {
    if (l < 1 || l > 100) fail(Errc::BadPercent, "l must lie in [1, 100], got " + std::to_string(l));
}

// Reuses the additive structure of positional rules: sincere scores are the
// full-profile scores minus the malicious voters' contributions.
class Evaluator {
public:
    Evaluator(const PreferenceProfile& p, Rule rule) : p_(p), rule_(rule), count_(p.ballots.size(), 0) {
        validate(p);
        for (std::size_t b = 0; b < p.ballots.size(); ++b)
            for (std::uint64_t w = 0; w < p.ballots[b].weight; ++w) voter_ballot_.push_back(b);
        if (rule_ != Rule::irv) {
            total_.assign(p.alternatives + 1, 0);
            for (const auto& b : p.ballots)
                add_scores(total_, rule_, p.alternatives, b.order, static_cast<std::int64_t>(b.weight));
        }
    }

    std::uint64_t voters() const { return voter_ballot_.size(); }

    bool changes(std::span<const std::uint64_t> malicious) {
        touched_.clear();
        for (auto v : malicious) {
            if (v >= voter_ballot_.size()) fail(Errc::InvalidArgument, "voter index out of range");
            const auto b = voter_ballot_[v];
            if (count_[b]++ == 0) touched_.push_back(b);
        }
        bool changed = false;
        try {
            changed = rule_ == Rule::irv ? changes_generic() : changes_additive();
        } catch (...) {
            reset();
            throw;
        }
        reset();
        return changed;
    }

    // Changes given per-ballot malicious counts, for the exact enumerator.
    bool changes_counts(const std::vector<std::uint64_t>& counts) {
        touched_.clear();
        for (std::size_t b = 0; b < counts.size(); ++b)
            if ((count_[b] = counts[b]) > 0) touched_.push_back(b);
        const bool changed = rule_ == Rule::irv ? changes_generic() : changes_additive();
        reset();
        return changed;
    }

private:
    void reset() {
        for (auto b : touched_) count_[b] = 0;
    }

    bool changes_additive() {
        const auto k = p_.alternatives;
        auto sincere = total_;
        for (auto b : touched_)
            add_scores(sincere, rule_, k, p_.ballots[b].order, -static_cast<std::int64_t>(count_[b]));
        const auto agg = ranking_from_scores(sincere, k);
        auto all = sincere;
        for (auto b : touched_)
            add_scores(all, rule_, k, malicious_transform(p_.ballots[b].order, agg),
                       static_cast<std::int64_t>(count_[b]));
        return ranking_from_scores(all, k).front() != agg.front();
    }

    bool changes_generic() {
        const auto k = p_.alternatives;
        std::vector<Weighted> sincere;
        for (std::size_t b = 0; b < p_.ballots.size(); ++b) {
            const auto w = p_.ballots[b].weight - count_[b];
            if (w > 0) sincere.push_back({&p_.ballots[b].order, w});
        }
        const auto agg = ranking(sincere, k, rule_);
        std::vector<Order> transformed;
        transformed.reserve(touched_.size());
        for (auto b : touched_) transformed.push_back(malicious_transform(p_.ballots[b].order, agg));
        auto all = sincere;
        for (std::size_t i = 0; i < touched_.size(); ++i) all.push_back({&transformed[i], count_[touched_[i]]});
        return ranking(all, k, rule_).front() != agg.front();
    }

    const PreferenceProfile& p_;
    Rule rule_;
    std::vector<std::size_t> voter_ballot_;
    std::vector<std::int64_t> total_;
    std::vector<std::uint64_t> count_;
    std::vector<std::size_t> touched_;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i; split the factors to delay overflow.
        const std::uint64_t g = std::gcd(r, i);
        const std::uint64_t f = (n - k + i) / (i / g);
        if (__builtin_mul_overflow(r / g, f, &r)) fail(Errc::InvalidArgument, "subset count overflows");
    }
    return r;
}

}  // namespace

std::uint64_t PreferenceProfile::voters() const {
    std::uint64_t n = 0;
    for (const auto& b : ballots) n += b.weight;
    return n;
}

void validate(const PreferenceProfile& p) {
    if (p.alternatives == 0 || p.voters() == 0) fail(Errc::EmptyProfile, "profile has no alternatives or voters");
    if (!p.names.empty() && p.names.size() != p.alternatives)
        fail(Errc::InvalidArgument, "names must cover every alternative");
    for (std::size_t i = 0; i < p.ballots.size(); ++i)
        check_order(p.ballots[i].order, p.alternatives, "ballot " + std::to_string(i + 1) + ": ");
}

PreferenceProfile parse_ballot_file(std::string_view text) {
    PreferenceProfile p;
    std::optional<std::uint64_t> declared_voters, declared_orders;
    std::size_t voters_line = 0, orders_line = 0, line_no = 0, ballot_lines = 0;
    std::map<Alt, std::string> names;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (line.empty()) continue;

        if (line.front() == '#') {
            auto body = trim(line.substr(1));
            const auto colon = body.find(':');
            if (colon == std::string_view::npos) continue;
            const auto key = trim(body.substr(0, colon));
            const auto value = trim(body.substr(colon + 1));
            auto number = [&](auto& out) {
                if (!parse_uint(value, out)) throw ParseFailure(line_no, "expected a number after '" + std::string(key) + "'");
            };
            if (key == "NUMBER ALTERNATIVES") {
                if (ballot_lines > 0) throw ParseFailure(line_no, "alternatives declared after ballots");
                number(p.alternatives);
                if (p.alternatives == 0) throw ParseFailure(line_no, "at least one alternative is required");
            } else if (key.starts_with("ALTERNATIVE NAME")) {
                Alt id = 0;
                if (!parse_uint(key.substr(16), id) || id == 0) throw ParseFailure(line_no, "bad alternative id");
                names[id] = std::string(value);
            } else if (key == "NUMBER VOTERS") {
                number(declared_voters.emplace());
                voters_line = line_no;
            } else if (key == "NUMBER UNIQUE ORDERS") {
                number(declared_orders.emplace());
                orders_line = line_no;
            }
            continue;
        }

        if (p.alternatives == 0) throw ParseFailure(line_no, "ballot before '# NUMBER ALTERNATIVES'");
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseFailure(line_no, "expected 'count: a,b,...'");
        Ballot b;
        if (!parse_uint(line.substr(0, colon), b.weight) || b.weight == 0)
            throw ParseFailure(line_no, "ballot count must be a positive integer");
        auto rest = trim(line.substr(colon + 1));
        if (rest.find_first_of("{}") != std::string_view::npos)
            throw ParseFailure(line_no, "tied alternatives are not supported");
        if (rest.empty()) throw ParseFailure(line_no, "empty ballot");
        std::size_t start = 0;
        while (true) {
            const auto comma = rest.find(',', start);
            Alt a = 0;
            if (!parse_uint(rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), a))
                throw ParseFailure(line_no, "expected an alternative id");
            if (a < 1 || a > p.alternatives)
                throw ParseFailure(line_no, "alternative " + std::to_string(a) + " outside 1.." +
                                                std::to_string(p.alternatives));
            if (std::find(b.order.begin(), b.order.end(), a) != b.order.end())
                fail(Errc::DuplicateAlternativeInBallot,
                     "line " + std::to_string(line_no) + ": alternative " + std::to_string(a) + " listed twice");
            b.order.push_back(a);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        p.ballots.push_back(std::move(b));
        ++ballot_lines;
    }

    if (p.alternatives == 0) throw ParseFailure(line_no, "missing '# NUMBER ALTERNATIVES'");
    if (!names.empty()) {
        p.names.assign(p.alternatives, "");
        for (const auto& [id, name] : names) {
            if (id > p.alternatives) fail(Errc::ParseError, "alternative name for unknown id " + std::to_string(id));
            p.names[id - 1] = name;
        }
    }
    if (declared_voters && *declared_voters != p.voters())
        throw ParseFailure(voters_line, "declared " + std::to_string(*declared_voters) + " voters, found " +
                                            std::to_string(p.voters()));
    if (declared_orders && *declared_orders != ballot_lines)
        throw ParseFailure(orders_line, "declared " + std::to_string(*declared_orders) + " orders, found " +
                                            std::to_string(ballot_lines));
    return p;
}

std::string serialize(const PreferenceProfile& p) {
    std::map<Order, std::uint64_t> merged;
    for (const auto& b : p.ballots) merged[b.order] += b.weight;
    std::vector<std::pair<Order, std::uint64_t>> rows(merged.begin(), merged.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second > b.second; });

    std::ostringstream out;
    out << "# NUMBER ALTERNATIVES: " << p.alternatives << '\n';
    for (std::size_t i = 0; i < p.names.size(); ++i)
        if (!p.names[i].empty()) out << "# ALTERNATIVE NAME " << i + 1 << ": " << p.names[i] << '\n';
    out << "# NUMBER VOTERS: " << p.voters() << '\n';
    out << "# NUMBER UNIQUE ORDERS: " << rows.size() << '\n';
    for (const auto& [order, weight] : rows) {
        out << weight << ": ";
        for (std::size_t j = 0; j < order.size(); ++j) out << (j ? "," : "") << order[j];
        out << '\n';
    }
    return out.str();
}

std::string_view to_string(Rule r) noexcept {
    switch (r) {
        case Rule::plurality: return "plurality";
        case Rule::borda_truncated: return "borda_truncated";
        case Rule::irv: return "irv";
    }
    return "unknown";
}

Rule rule_from_string(std::string_view s) {
    for (auto r : {Rule::plurality, Rule::borda_truncated, Rule::irv})
        if (to_string(r) == s) return r;
    fail(Errc::InvalidArgument, "unknown rule '" + std::string(s) + "'");
}

Order aggregate_ranking(const PreferenceProfile& profile, Rule rule) {
    validate(profile);
    std::vector<Weighted> all;
    for (const auto& b : profile.ballots) all.push_back({&b.order, b.weight});
    return ranking(all, profile.alternatives, rule);
}

Alt winner(const PreferenceProfile& profile, Rule rule) { return aggregate_ranking(profile, rule).front(); }

Order malicious_transform(const Order& true_ballot, const Order& sincere_aggregate) {
    if (true_ballot.empty()) return {};
    const auto first = std::find(sincere_aggregate.begin(), sincere_aggregate.end(), true_ballot.front());
    Order out;
    for (auto a : true_ballot)
        if (std::find(sincere_aggregate.begin(), first, a) == first) out.push_back(a);
    return out;
}

std::uint64_t malicious_count(std::uint64_t voters, std::uint32_t l) {
    check_percent(l);
    return voters / 100 * (100 - l) + voters % 100 * (100 - l) / 100;
}

bool winner_changes(const PreferenceProfile& profile, std::span<const std::uint64_t> malicious, Rule rule) {
    return Evaluator(profile, rule).changes(malicious);
}

SimResult simulate(const PreferenceProfile& profile, std::uint32_t l, std::uint64_t iterations, Rule rule,
                   std::uint64_t seed, const IterationObserver& observe) {
    check_percent(l);
    Evaluator eval(profile, rule);
    const auto n = eval.voters();
    const auto m = malicious_count(n, l);
    SimResult res{l, iterations, 0, 0};
    std::vector<std::uint64_t> perm(n);
    for (std::uint64_t it = 0; it < iterations; ++it) {
        std::mt19937_64 rng(mix_seed(seed, it));
        std::iota(perm.begin(), perm.end(), 0);
        for (std::uint64_t i = 0; i < m; ++i) std::swap(perm[i], perm[i + uniform_below(rng, n - i)]);
        std::vector<std::uint64_t> chosen(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(m));
        std::sort(chosen.begin(), chosen.end());
        const bool changed = eval.changes(chosen);
        res.changes += changed ? 1 : 0;
        if (observe) observe(chosen, changed);
    }
    res.probability = iterations ? static_cast<double>(res.changes) / static_cast<double>(iterations) : 0.0;
    return res;
}

// Groups subsets by how many voters they take from each distinct ballot;
// each composition stands for prod C(weight_b, count_b) subsets.
SimResult exact_probability(const PreferenceProfile& profile, std::uint32_t l, Rule rule) {
    check_percent(l);
    Evaluator eval(profile, rule);
    const auto m = malicious_count(eval.voters(), l);
    const auto& ballots = profile.ballots;
    SimResult res{l, binomial(eval.voters(), m), 0, 0};

    std::vector<std::uint64_t> suffix(ballots.size() + 1, 0);
    for (std::size_t b = ballots.size(); b-- > 0;) suffix[b] = suffix[b + 1] + ballots[b].weight;
    std::vector<std::uint64_t> counts(ballots.size(), 0);
    auto rec = [&](auto&& self, std::size_t b, std::uint64_t left, std::uint64_t mult) -> void {
        if (b == ballots.size()) {
            if (left == 0 && eval.changes_counts(counts)) res.changes += mult;
            return;
        }
        if (left > suffix[b]) return;
        for (std::uint64_t c = 0; c <= std::min(left, ballots[b].weight); ++c) {
            counts[b] = c;
            self(self, b + 1, left - c, mult * binomial(ballots[b].weight, c));
        }
        counts[b] = 0;
    };
    rec(rec, 0, m, 1);
    res.probability = static_cast<double>(res.changes) / static_cast<double>(res.iterations);
    return res;
}

std::vector<SimResult> sweep(const PreferenceProfile& profile, Rule rule, std::uint64_t seed, std::uint64_t iterations,
                             unsigned threads) {
    validate(profile);
    std::vector<SimResult> rows(100);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, 100u);
    std::atomic<std::uint32_t> next{1};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                for (auto l = next++; l <= 100; l = next++)
                    rows[l - 1] = simulate(profile, l, iterations, rule, mix_seed(seed, l));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

std::string sweep_csv(std::span<const SimResult> rows) {
    std::ostringstream out;
    out << "l,iterations,changes,probability\n";
    char buf[32];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.probability);
        out << r.l << ',' << r.iterations << ',' << r.changes << ',' << buf << '\n';
    }
    return out.str();
}

}  // namespace trc::voting
