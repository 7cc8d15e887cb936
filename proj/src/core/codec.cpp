// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/core/codec.hpp"

#include "trc/common/errors.hpp"

namespace trc::core {

std::string canonical(const Json& j) { return j.dump(); }

Json to_json(const group::GroupConfig& config) {
    if (const auto* toy = std::get_if<group::ToyConfig>(&config)) {
        Json j{{"backend", "toy"}, {"p", toy->p}, {"g", toy->g}};
        if (toy->order) j["order"] = *toy->order;
        return j;
    }
    return Json{{"backend", "curve"}, {"curve", std::get<group::CurveConfig>(config).curve}};
}

group::GroupConfig group_config_from_json(const Json& j) {
    return with_json_errors([&]() -> group::GroupConfig {
        auto backend = j.at("backend").get<std::string>();
        if (backend == "toy") {
            group::ToyConfig c{j.at("p").get<std::uint64_t>(), j.at("g").get<std::uint64_t>(), {}};
            if (j.contains("order")) c.order = j.at("order").get<std::uint64_t>();
            return c;
        }
        if (backend == "curve") return group::CurveConfig{j.value("curve", std::string("bls12-381"))};
        fail(Errc::MalformedEncoding, "unknown backend '" + backend + "'");
    });
}

Json to_json(const TimelockRequest& request) {
    Json masks = Json::array();
    for (const auto& m : request.masks) masks.push_back({{"index", m.index}, {"alpha", to_hex(m.alpha)}});
    return Json{{"ciphertext", to_hex(request.ciphertext)},
                {"decrypt_time", request.decrypt_time},
                {"commitment_a", request.commitment_a.hex()},
                {"commitment_b", request.commitment_b.hex()},
                {"masks", std::move(masks)},
                {"threshold", request.threshold},
                {"holders", request.holders},
                {"request_id", request.request_id}};
}

TimelockRequest request_from_json(const Group& group, const Json& j) {
    return with_json_errors([&] {
        TimelockRequest r;
        r.ciphertext = from_hex(j.at("ciphertext").get<std::string>());
        r.decrypt_time = j.at("decrypt_time").get<std::int64_t>();
        r.commitment_a = group.deserialize_g1(from_hex(j.at("commitment_a").get<std::string>()));
        r.commitment_b = group.deserialize_g2(from_hex(j.at("commitment_b").get<std::string>()));
        for (const auto& m : j.at("masks"))
            r.masks.push_back({m.at("index").get<std::uint32_t>(), from_hex(m.at("alpha").get<std::string>())});
        r.threshold = j.at("threshold").get<std::uint32_t>();
        r.holders = j.at("holders").get<std::uint32_t>();
        r.request_id = j.at("request_id").get<std::string>();
        return r;
    });
}

Json to_json(const SecretShare& share) {
    return Json{{"holder_index", share.holder_index}, {"value", share.value.hex()}};
}

SecretShare share_from_json(const Group& group, const Json& j) {
    return with_json_errors([&] {
        return SecretShare{j.at("holder_index").get<std::uint32_t>(),
                           group.deserialize_g1(from_hex(j.at("value").get<std::string>()))};
    });
}

Json to_json(const Group& group, const KeyPair& keys, bool include_secret) {
    Json j{{"index", keys.index}, {"pk", keys.pk.hex()}};
    if (include_secret) j["sk"] = to_hex(group.exponents().encode(keys.sk));
    return j;
}

KeyPair keypair_from_json(const Group& group, const Json& j) {
    return with_json_errors([&] {
        auto index = j.at("index").get<std::uint32_t>();
        auto sk = group.exponents().decode(from_hex(j.at("sk").get<std::string>()));
        auto keys = keypair_from_secret(group, sk, index);
        if (j.contains("pk") && j.at("pk").get<std::string>() != keys.pk.hex())
            fail(Errc::MalformedEncoding, "public key does not match secret key");
        return keys;
    });
}

}  // namespace trc::core
