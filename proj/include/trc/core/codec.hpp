// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "trc/common/errors.hpp"
#include "trc/core/protocol.hpp"

namespace trc::core {

using Json = nlohmann::json;

// Compact dump with sorted keys (nlohmann objects are ordered maps), so the
// same value always serialises to the same bytes.
std::string canonical(const Json& j);

Json to_json(const group::GroupConfig& config);
group::GroupConfig group_config_from_json(const Json& j);

// Byte fields as lower-case hex, integers as JSON numbers.
Json to_json(const TimelockRequest& request);
TimelockRequest request_from_json(const Group& group, const Json& j);

Json to_json(const SecretShare& share);
SecretShare share_from_json(const Group& group, const Json& j);

Json to_json(const Group& group, const KeyPair& keys, bool include_secret);
KeyPair keypair_from_json(const Group& group, const Json& j);

// Rethrows nlohmann type/parse errors as MalformedEncoding.
template <class Fn>
auto with_json_errors(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Json::exception& e) {
        throw Error(Errc::MalformedEncoding, e.what());
    }
}

}  // namespace trc::core
