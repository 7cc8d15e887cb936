// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trc/common/bytes.hpp"
#include "trc/core/keys.hpp"
#include "trc/core/polynomial.hpp"

namespace trc::core {

// alpha_i = encode(P(i)) XOR encode(y_i), fixed width of the share field.
struct Mask {
    std::uint32_t index = 0;
    Bytes alpha;

    friend bool operator==(const Mask&, const Mask&) = default;
};

/// The single broadcast a client makes. Holder i (1-based) is the i-th key
/// of the holder list the request was built against.
struct TimelockRequest {
    Bytes ciphertext;
    std::int64_t decrypt_time = 0;
    G1Element commitment_a;  // g1^r
    G2Element commitment_b;  // g2^r
    std::vector<Mask> masks;  // indices t..n
    std::uint32_t threshold = 0;
    std::uint32_t holders = 0;
    std::string request_id;

    friend bool operator==(const TimelockRequest&, const TimelockRequest&) = default;
};

struct SecretShare {
    std::uint32_t holder_index = 0;
    G1Element value;

    friend bool operator==(const SecretShare&, const SecretShare&) = default;
};

enum class ShareVerdict { Valid, InvalidShare, DishonestClient };

std::string_view to_string(ShareVerdict v) noexcept;

// The polynomial through (0,k), (1,y_1), ..., (t-1,y_{t-1}) with
// y_i = share_to_scalar(pk_i^r).
Polynomial sharing_polynomial(const Group& group, const Scalar& k, const Scalar& r,
                              std::span<const G1Element> holder_pks, std::uint32_t threshold);

// k lives in share_field(), r in exponents(); both nonzero.
// Throws ThresholdOutOfRange, DuplicateHolderKey, InvalidArgument.
TimelockRequest build_request(const Group& group, const Scalar& k, const Scalar& r, ByteView message,
                              std::int64_t decrypt_time, std::span<const G1Element> holder_pks,
                              std::uint32_t threshold);

// Content hash of every other field, hex.
std::string compute_request_id(const TimelockRequest& request);

// Structural checks: 1 <= t <= n, masks cover exactly t..n with field-width
// alphas, id matches content. Throws MalformedRequest.
void validate_request(const Group& group, const TimelockRequest& request);

// commitment_a^sk. Throws IndexOutOfRange if keys.index is not in 1..n.
SecretShare derive_share(const Group& group, const TimelockRequest& request, const KeyPair& keys);

// Valid iff e(s, g2) == e(pk, b). Otherwise DishonestClient iff
// e(a, g2) != e(g1, b), else InvalidShare.
ShareVerdict verify_share(const Group& group, const SecretShare& share, const G1Element& pk,
                          const TimelockRequest& request);

// (i, y_i) for i < t, (i, decode(encode(y_i) XOR alpha_i)) for i >= t.
Point share_point(const Group& group, const TimelockRequest& request, const SecretShare& share);

// Verifies every supplied share, then interpolates the t lowest-index ones
// and returns P(0). `holder_pks` is the full list the request was built on.
// Throws NotEnoughShares, InvalidShareIncluded, DuplicateX, IndexOutOfRange.
Scalar reconstruct_key(const Group& group, const TimelockRequest& request, std::span<const SecretShare> shares,
                       std::span<const G1Element> holder_pks);

// reconstruct_key followed by decrypt_message.
Bytes open_request(const Group& group, const TimelockRequest& request, std::span<const SecretShare> shares,
                   std::span<const G1Element> holder_pks);

}  // namespace trc::core
