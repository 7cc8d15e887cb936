// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/agents/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

namespace trc::agents {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Acc {
    std::size_t count = 0;
    double sum = 0;
    double min = 0;
    double max = 0;
    std::size_t delays = 0;
    double delay_sum = 0;

    void add(double v) {
        min = count == 0 ? v : std::min(min, v);
        max = count == 0 ? v : std::max(max, v);
        sum += v;
        ++count;
    }
};

}  // namespace

DeviationStats measure_deviation(std::span<const ScenarioReport> reports) {
    Acc all;
    std::map<std::int64_t, Acc> by_duration;
    for (const auto& rep : reports) {
        for (const auto& req : rep.requests) {
            if (!req.deviation_s) continue;
            all.add(*req.deviation_s);
            auto& b = by_duration[req.duration_s];
            b.add(*req.deviation_s);
            if (req.decrypt_time_s) {
                ++b.delays;
                b.delay_sum += *req.decrypt_time_s - static_cast<double>(req.requested_time);
            }
        }
    }
    if (all.count == 0) fail(Errc::EmptyReport, "no request reached a reveal time");

    DeviationStats s{all.count, all.sum / static_cast<double>(all.count), all.min, all.max, {}};
    for (const auto& [d, b] : by_duration)
        s.series.push_back(DeviationBucket{d, b.count, b.sum / static_cast<double>(b.count), b.min, b.max,
                                           b.delays ? b.delay_sum / static_cast<double>(b.delays) : 0.0});
    return s;
}

std::string deviation_csv(const DeviationStats& stats) {
    std::ostringstream out;
    out << "duration_s,requests,mean_deviation_s,min_deviation_s,max_deviation_s,mean_decrypt_delay_s\n";
    for (const auto& b : stats.series)
        out << b.duration_s << ',' << b.requests << ',' << fmt(b.mean_s) << ',' << fmt(b.min_s) << ','
            << fmt(b.max_s) << ',' << fmt(b.mean_decrypt_delay_s) << '\n';
    return out.str();
}

std::vector<ScalabilityPoint> scalability_sweep(const ScenarioConfig& base, std::span<const std::uint32_t> n_list,
                                                std::uint64_t seed) {
    std::vector<ScalabilityPoint> points;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        auto cfg = base;
        const auto n = n_list[i];
        cfg.holders.assign(n, AgentConfig{});
        cfg.threshold = n / 2 + 1;
        cfg.fee.reset();
        cfg.name = base.name + "/n=" + std::to_string(n);
        const auto rep = run_scenario(cfg, mix_seed(seed, i));

        ScalabilityPoint pt{n, cfg.threshold, 0, 0, 0, 0};
        double publish = 0;
        for (const auto& r : rep.requests) {
            if (!r.reveal_reference_time) continue;
            publish += static_cast<double>(*r.reveal_reference_time - r.requested_time);
            ++pt.requests;
        }
        if (pt.requests > 0) publish /= static_cast<double>(pt.requests);
        pt.publish_latency_s = publish;

        double work = 0;
        std::size_t counted = 0;
        for (const auto& h : rep.holders) {
            if (h.reconstructions == 0) continue;
            work += static_cast<double>(h.verifications_to_reconstruct) / h.reconstructions;
            ++counted;
        }
        if (counted > 0) pt.verifications_per_holder = work / static_cast<double>(counted);
        pt.verification_latency_s = pt.verifications_per_holder * cfg.verify_cost_s;
        points.push_back(pt);
    }
    return points;
}

std::string scalability_csv(std::span<const ScalabilityPoint> points) {
    std::ostringstream out;
    out << "n,threshold,requests,publish_latency_s,verification_latency_s,verifications_per_holder\n";
    for (const auto& p : points)
        out << p.n << ',' << p.threshold << ',' << p.requests << ',' << fmt(p.publish_latency_s) << ','
            << fmt(p.verification_latency_s) << ',' << fmt(p.verifications_per_holder) << '\n';
    return out.str();
}

double linear_fit_r2(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) fail(Errc::InvalidArgument, "linear fit needs two or more paired points");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) fail(Errc::InvalidArgument, "linear fit needs distinct x values");
    if (syy == 0) return 1.0;
    return (sxy * sxy) / (sxx * syy);
}

}  // namespace trc::agents
