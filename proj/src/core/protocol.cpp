// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/core/protocol.hpp"

#include <algorithm>
#include <set>

#include "trc/common/errors.hpp"
#include "trc/common/hash.hpp"
#include "trc/core/cipher.hpp"

namespace trc::core {

namespace {

void check_holder_count(const Group& group, std::size_t n, std::uint32_t t) {
    if (n < 2) fail(Errc::ThresholdOutOfRange, "at least two holders are required");
    if (t < 1 || t > n)
        fail(Errc::ThresholdOutOfRange, "threshold " + std::to_string(t) + " outside [1, " + std::to_string(n) + "]");
    // Indices 0..n must be distinct field elements.
    if (group.share_field().modulus() <= n)
        fail(Errc::ThresholdOutOfRange, "holder count does not fit in the share field");
}

Bytes xor_bytes(ByteView a, ByteView b) {
    Bytes out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= b[i];
    return out;
}

void hash_field(Sha256& h, ByteView bytes) {
    Bytes len;
    append_be64(len, bytes.size());
    h.update(len).update(bytes);
}

const Mask* find_mask(const TimelockRequest& request, std::uint32_t index) {
    auto it = std::find_if(request.masks.begin(), request.masks.end(),
                           [&](const Mask& m) { return m.index == index; });
    return it == request.masks.end() ? nullptr : &*it;
}

}  // namespace

std::string_view to_string(ShareVerdict v) noexcept {
    switch (v) {
        case ShareVerdict::Valid: return "Valid";
        case ShareVerdict::InvalidShare: return "InvalidShare";
        case ShareVerdict::DishonestClient: return "DishonestClient";
    }
    return "Unknown";
}

Polynomial sharing_polynomial(const Group& group, const Scalar& k, const Scalar& r,
                              std::span<const G1Element> holder_pks, std::uint32_t threshold) {
    const auto& field = group.share_field();
    std::vector<Point> points;
    points.reserve(threshold);
    points.push_back({field.from_u64(0), k});
    for (std::uint32_t i = 1; i < threshold; ++i) {
        auto share = group.pow(holder_pks[i - 1], r);
        points.push_back({field.from_u64(i), group.share_to_scalar(share)});
    }
    return lagrange_interpolate(field, points);
}

TimelockRequest build_request(const Group& group, const Scalar& k, const Scalar& r, ByteView message,
                              std::int64_t decrypt_time, std::span<const G1Element> holder_pks,
                              std::uint32_t threshold) {
    const auto& field = group.share_field();
    const std::size_t n = holder_pks.size();
    check_holder_count(group, n, threshold);
    if (!field.contains(k) || k.is_zero()) fail(Errc::InvalidArgument, "k must be a nonzero field element");
    if (!group.exponents().contains(r) || r.is_zero()) fail(Errc::InvalidArgument, "r must be a nonzero exponent");
    std::set<G1Element> distinct(holder_pks.begin(), holder_pks.end());
    if (distinct.size() != n) fail(Errc::DuplicateHolderKey, "holder public keys must be distinct");

    TimelockRequest req;
    req.ciphertext = encrypt_message(field, k, message);
    req.decrypt_time = decrypt_time;
    req.commitment_a = group.pow(group.g1(), r);
    req.commitment_b = group.pow(group.g2(), r);
    req.threshold = threshold;
    req.holders = static_cast<std::uint32_t>(n);

    Polynomial poly = sharing_polynomial(group, k, r, holder_pks, threshold);
    for (std::uint32_t i = threshold; i <= n; ++i) {
        Scalar y = group.share_to_scalar(group.pow(holder_pks[i - 1], r));
        Scalar p_i = poly_eval(field, poly, field.from_u64(i));
        req.masks.push_back({i, xor_bytes(field.encode(p_i), field.encode(y))});
    }
    req.request_id = compute_request_id(req);
    return req;
}

std::string compute_request_id(const TimelockRequest& request) {
    Sha256 h;
    h.update("trc/request/v1");
    Bytes header;
    append_be64(header, static_cast<std::uint64_t>(request.decrypt_time));
    append_be64(header, request.threshold);
    append_be64(header, request.holders);
    append_be64(header, request.masks.size());
    h.update(header);
    hash_field(h, request.commitment_a.bytes());
    hash_field(h, request.commitment_b.bytes());
    for (const auto& m : request.masks) {
        Bytes idx;
        append_be64(idx, m.index);
        h.update(idx);
        hash_field(h, m.alpha);
    }
    hash_field(h, request.ciphertext);
    auto digest = h.finish();
    return to_hex(ByteView(digest).first(16));
}

void validate_request(const Group& group, const TimelockRequest& request) {
    try {
        check_holder_count(group, request.holders, request.threshold);
        group.deserialize_g1(request.commitment_a.bytes());
        group.deserialize_g2(request.commitment_b.bytes());
    } catch (const Error& e) {
        fail(Errc::MalformedRequest, e.what());
    }
    const std::size_t expected = request.holders - request.threshold + 1;
    if (request.masks.size() != expected)
        fail(Errc::MalformedRequest, "expected " + std::to_string(expected) + " masks");
    for (std::size_t j = 0; j < expected; ++j) {
        const auto& m = request.masks[j];
        if (m.index != request.threshold + j) fail(Errc::MalformedRequest, "mask indices must run t..n in order");
        if (m.alpha.size() != group.share_field().byte_width()) fail(Errc::MalformedRequest, "mask has wrong width");
    }
    if (request.ciphertext.size() < kCipherTagSize) fail(Errc::MalformedRequest, "ciphertext shorter than its tag");
    if (request.request_id != compute_request_id(request)) fail(Errc::MalformedRequest, "request id mismatch");
}

SecretShare derive_share(const Group& group, const TimelockRequest& request, const KeyPair& keys) {
    if (keys.index < 1 || keys.index > request.holders)
        fail(Errc::IndexOutOfRange, "holder index " + std::to_string(keys.index) + " not in request");
    return SecretShare{keys.index, group.pow(request.commitment_a, keys.sk)};
}

ShareVerdict verify_share(const Group& group, const SecretShare& share, const G1Element& pk,
                          const TimelockRequest& request) {
    if (group.pairing(share.value, group.g2()) == group.pairing(pk, request.commitment_b)) return ShareVerdict::Valid;
    if (group.pairing(request.commitment_a, group.g2()) != group.pairing(group.g1(), request.commitment_b))
        return ShareVerdict::DishonestClient;
    return ShareVerdict::InvalidShare;
}

Point share_point(const Group& group, const TimelockRequest& request, const SecretShare& share) {
    const auto& field = group.share_field();
    const std::uint32_t i = share.holder_index;
    if (i < 1 || i > request.holders) fail(Errc::IndexOutOfRange, "share index " + std::to_string(i));
    Scalar y = group.share_to_scalar(share.value);
    if (i < request.threshold) return {field.from_u64(i), y};
    const Mask* mask = find_mask(request, i);
    if (mask == nullptr) fail(Errc::MalformedRequest, "no mask for holder " + std::to_string(i));
    if (mask->alpha.size() != field.byte_width()) fail(Errc::MalformedRequest, "mask has wrong width");
    return {field.from_u64(i), field.decode(xor_bytes(field.encode(y), mask->alpha))};
}

Scalar reconstruct_key(const Group& group, const TimelockRequest& request, std::span<const SecretShare> shares,
                       std::span<const G1Element> holder_pks) {
    if (holder_pks.size() != request.holders)
        fail(Errc::InvalidArgument, "expected " + std::to_string(request.holders) + " holder keys");
    if (shares.size() < request.threshold)
        fail(Errc::NotEnoughShares,
             std::to_string(shares.size()) + " shares, threshold " + std::to_string(request.threshold));

    std::vector<SecretShare> sorted(shares.begin(), shares.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const SecretShare& a, const SecretShare& b) { return a.holder_index < b.holder_index; });
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        const auto i = sorted[j].holder_index;
        if (i < 1 || i > request.holders) fail(Errc::IndexOutOfRange, "share index " + std::to_string(i));
        if (j > 0 && sorted[j - 1].holder_index == i) fail(Errc::DuplicateX, "two shares for holder " + std::to_string(i));
        if (verify_share(group, sorted[j], holder_pks[i - 1], request) != ShareVerdict::Valid)
            fail(Errc::InvalidShareIncluded, "share of holder " + std::to_string(i) + " does not verify");
    }

    std::vector<Point> points;
    points.reserve(request.threshold);
    for (std::uint32_t j = 0; j < request.threshold; ++j) points.push_back(share_point(group, request, sorted[j]));
    const auto& field = group.share_field();
    return poly_eval(field, lagrange_interpolate(field, points), field.from_u64(0));
}

Bytes open_request(const Group& group, const TimelockRequest& request, std::span<const SecretShare> shares,
                   std::span<const G1Element> holder_pks) {
    Scalar k = reconstruct_key(group, request, shares, holder_pks);
    return decrypt_message(group.share_field(), k, request.ciphertext);
}

}  // namespace trc::core
