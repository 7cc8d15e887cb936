// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/group/group.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "trc/common/errors.hpp"
#include "trc/group/curve_group.hpp"
#include "trc/group/toy_group.hpp"

namespace trc::group {

std::string_view to_string(BackendId id) noexcept { return id == BackendId::toy ? "toy" : "curve"; }

namespace {

// Toy groups carry a discrete-log table; identical configurations share one
// immutable instance.
GroupPtr cached_toy(const ToyConfig& config) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, GroupPtr> cache;
    const auto key = std::make_tuple(config.p, config.g, config.order.value_or(0));
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto grp = std::make_shared<ToyGroup>(config);
    if (cache.size() >= 16) cache.clear();
    cache.emplace(key, grp);
    return grp;
}

}  // namespace

GroupPtr make_group(const GroupConfig& config) {
    if (const auto* toy = std::get_if<ToyConfig>(&config)) return cached_toy(*toy);
    const auto& curve = std::get<CurveConfig>(config);
    if (curve.curve != CurveGroup::kCurveId) fail(Errc::UnsupportedCurve, "unsupported curve '" + curve.curve + "'");
    static const GroupPtr shared = std::make_shared<CurveGroup>();
    return shared;
}

}  // namespace trc::group
