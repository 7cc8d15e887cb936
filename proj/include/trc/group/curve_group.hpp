// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "trc/group/group.hpp"

namespace trc::group {

/// BLS12-381 backed by blst. G1 and G2 use the standard 48/96-byte compressed
/// encodings; GT elements are the twelve Fp coordinates of the Fp12 value,
/// big-endian, 576 bytes in total.
class CurveGroup final : public Group {
public:
    static constexpr std::string_view kCurveId = "bls12-381";

    CurveGroup();

    GroupConfig config() const override { return CurveConfig{std::string(kCurveId)}; }

    G1Element identity_g1() const override;
    G2Element identity_g2() const override;
    GtElement identity_gt() const override;

    G1Element pow(const G1Element& base, const Scalar& exp) const override;
    G2Element pow(const G2Element& base, const Scalar& exp) const override;
    G1Element mul(const G1Element& a, const G1Element& b) const override;
    G2Element mul(const G2Element& a, const G2Element& b) const override;
    GtElement pairing(const G1Element& p, const G2Element& q) const override;

    std::size_t g1_size() const noexcept override { return 48; }
    std::size_t g2_size() const noexcept override { return 96; }
    std::size_t gt_size() const noexcept override { return 576; }
    G1Element deserialize_g1(ByteView bytes) const override;
    G2Element deserialize_g2(ByteView bytes) const override;
    GtElement deserialize_gt(ByteView bytes) const override;

    G2Element hash_to_g2(ByteView message, std::string_view domain) const override;
    Scalar share_to_scalar(const G1Element& share) const override;
};

}  // namespace trc::group
