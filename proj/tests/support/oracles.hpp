// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

// Small-integer reference implementations used as test oracles. None of
// these call into the library.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trc::testing {

using u64 = std::uint64_t;

inline u64 ipow(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Fermat inverse; p must be prime and small enough that p*p fits in u64.
inline u64 iinv(u64 a, u64 p) { return ipow(a % p, p - 2, p); }

// Value at x0 of the polynomial through pts, straight from the Lagrange
// basis formula. Never builds coefficients.
inline u64 lagrange_at(const std::vector<std::pair<u64, u64>>& pts, u64 x0, u64 p) {
    u64 acc = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        u64 num = 1, den = 1;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            num = num * ((x0 + p - pts[j].first % p) % p) % p;
            den = den * ((pts[i].first + p - pts[j].first % p) % p) % p;
        }
        acc = (acc + pts[i].second % p * num % p * iinv(den, p)) % p;
    }
    return acc;
}

inline u64 naive_eval(const std::vector<u64>& coeffs, u64 x, u64 p) {
    u64 acc = 0;
    for (std::size_t d = 0; d < coeffs.size(); ++d) acc = (acc + coeffs[d] * ipow(x, d, p)) % p;
    return acc;
}

// Exhaustive search for the coefficient vector of degree < pts.size().
inline std::vector<u64> search_coefficients(const std::vector<std::pair<u64, u64>>& pts, u64 p) {
    std::vector<u64> c(pts.size(), 0);
    for (;;) {
        bool ok = true;
        for (auto& [x, y] : pts)
            if (naive_eval(c, x, p) != y % p) {
                ok = false;
                break;
            }
        if (ok) return c;
        std::size_t d = 0;
        while (d < c.size() && ++c[d] == p) c[d++] = 0;
        if (d == c.size()) throw std::logic_error("no polynomial found");
    }
}

inline void for_each_subset(u64 n, u64 k, const std::function<void(const std::vector<u64>&)>& fn) {
    std::vector<u64> idx(k);
    for (u64 i = 0; i < k; ++i) idx[i] = i + 1;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct SecrecyResult {
    bool all_consistent = true;
    u64 views_checked = 0;
    u64 keys_checked = 0;
};

// Field-level sharing over Z_p: P is fixed by (0,k) and the defining values
// at x = 1..t-1. A coalition sees P at t-1 indices drawn from 1..n. For every
// coalition, every observed value tuple and every candidate k, search the
// unknown defining values for one that reproduces the observation.
// coalition_size defaults to t-1; larger sizes serve as a negative control.
inline SecrecyResult secrecy_brute_force(u64 p, u64 n, u64 t, u64 coalition_size = 0) {
    SecrecyResult out;
    if (coalition_size == 0) coalition_size = t - 1;
    for_each_subset(n, coalition_size, [&](const std::vector<u64>& coalition) {
        std::vector<u64> unknown;
        std::vector<u64> known_defining;
        for (u64 x = 1; x < t; ++x) {
            bool seen = false;
            for (u64 c : coalition) seen = seen || c == x;
            (seen ? known_defining : unknown).push_back(x);
        }
        std::vector<u64> observed(coalition.size(), 0);
        std::vector<std::pair<u64, u64>> pts;
        pts.reserve(t);
        for (;;) {
            ++out.views_checked;
            for (u64 k = 0; k < p; ++k) {
                ++out.keys_checked;
                std::vector<u64> guess(unknown.size(), 0);
                bool found = false;
                for (;;) {
                    pts.assign(1, {0, k});
                    for (u64 x = 1; x < t; ++x) {
                        for (std::size_t j = 0; j < coalition.size(); ++j)
                            if (coalition[j] == x) pts.emplace_back(x, observed[j]);
                        for (std::size_t j = 0; j < unknown.size(); ++j)
                            if (unknown[j] == x) pts.emplace_back(x, guess[j]);
                    }
                    bool match = true;
                    for (std::size_t j = 0; j < coalition.size() && match; ++j)
                        match = lagrange_at(pts, coalition[j], p) == observed[j];
                    if (match) {
                        found = true;
                        break;
                    }
                    std::size_t d = 0;
                    while (d < guess.size() && ++guess[d] == p) guess[d++] = 0;
                    if (d == guess.size()) break;
                }
                if (!found) out.all_consistent = false;
            }
            std::size_t d = 0;
            while (d < observed.size() && ++observed[d] == p) observed[d++] = 0;
            if (d == observed.size()) break;
        }
    });
    return out;
}

}  // namespace trc::testing
