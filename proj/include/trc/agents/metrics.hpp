// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trc/agents/engine.hpp"

namespace trc::agents {

struct DeviationBucket {
    std::int64_t duration_s = 0;
    std::size_t requests = 0;
    double mean_s = 0;
    double min_s = 0;
    double max_s = 0;
    double mean_decrypt_delay_s = 0;  // first honest decryption minus decrypt_time
};

struct DeviationStats {
    std::size_t requests = 0;
    double mean_s = 0;
    double min_s = 0;
    double max_s = 0;
    std::vector<DeviationBucket> series;  // ascending duration
};

// Aggregates every request with a reveal time. Throws EmptyReport if none.
DeviationStats measure_deviation(std::span<const ScenarioReport> reports);
std::string deviation_csv(const DeviationStats& stats);

struct ScalabilityPoint {
    std::uint32_t n = 0;
    std::uint32_t threshold = 0;
    std::size_t requests = 0;
    // Block time of the t-th share minus decrypt_time, on the reference clock.
    double publish_latency_s = 0;
    // Share verifications an honest holder runs before it can reconstruct,
    // times the configured cost per verification.
    double verification_latency_s = 0;
    double verifications_per_holder = 0;
};

// Runs `base` once per n with all-honest holders and t = n/2 + 1.
std::vector<ScalabilityPoint> scalability_sweep(const ScenarioConfig& base, std::span<const std::uint32_t> n_list,
                                                std::uint64_t seed);
std::string scalability_csv(std::span<const ScalabilityPoint> points);

// Coefficient of determination of the least-squares line through (x, y).
double linear_fit_r2(std::span<const double> x, std::span<const double> y);

}  // namespace trc::agents
