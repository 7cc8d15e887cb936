// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>

#include "trc/group/group.hpp"

namespace trc::core {

using group::G1Element;
using group::G2Element;
using group::Group;
using group::Scalar;

struct KeyPair {
    Scalar sk;
    G1Element pk;
    // Assigned by the ledger at registration; 0 until then.
    std::uint32_t index = 0;
};

// sk uniform in [1, order) from a seeded DRBG. Seed 0 is rejected.
KeyPair keygen(const Group& group, std::uint64_t seed, std::uint32_t index = 0);

KeyPair keypair_from_secret(const Group& group, const Scalar& sk, std::uint32_t index = 0);

// Proof of possession of sk: H(pk)^sk in G2, where H hashes into G2.
// Verified as e(pk, H(pk)) == e(g1, proof).
G2Element possession_challenge(const Group& group, const G1Element& pk);
G2Element prove_possession(const Group& group, const KeyPair& keys);
bool verify_possession(const Group& group, const G1Element& pk, const G2Element& proof);

}  // namespace trc::core
