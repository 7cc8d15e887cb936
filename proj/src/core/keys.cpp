// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/core/keys.hpp"

#include "trc/common/errors.hpp"

namespace trc::core {

KeyPair keygen(const Group& group, std::uint64_t seed, std::uint32_t index) {
    if (seed == 0) fail(Errc::InvalidArgument, "keygen seed must be nonzero");
    HashDrbg drbg(seed, "trc/keygen");
    return keypair_from_secret(group, group.exponents().random_nonzero(drbg), index);
}

KeyPair keypair_from_secret(const Group& group, const Scalar& sk, std::uint32_t index) {
    if (!group.exponents().contains(sk) || sk.is_zero())
        fail(Errc::InvalidArgument, "secret key must lie in [1, order)");
    return KeyPair{sk, group.pow(group.g1(), sk), index};
}

G2Element possession_challenge(const Group& group, const G1Element& pk) {
    return group.hash_to_g2(pk.bytes(), "trc/possession");
}

G2Element prove_possession(const Group& group, const KeyPair& keys) {
    return group.pow(possession_challenge(group, keys.pk), keys.sk);
}

bool verify_possession(const Group& group, const G1Element& pk, const G2Element& proof) {
    if (pk == group.identity_g1()) return false;
    auto challenge = possession_challenge(group, pk);
    return group.pairing(pk, challenge) == group.pairing(group.g1(), proof);
}

}  // namespace trc::core
