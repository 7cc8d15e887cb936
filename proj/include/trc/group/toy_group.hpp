// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "trc/group/group.hpp"

namespace trc::group {

/// The cyclic subgroup generated by g in (Z/pZ)*, with G2 := G1.
///
/// The pairing is e(g^a, g^b) = a*b mod order, with GT represented by that
/// exponent. Discrete logs come from an exhaustive table built once per group,
/// so pairings need p <= 2^20 (ToyGroupTooLarge otherwise).
class ToyGroup final : public Group {
public:
    static constexpr std::uint64_t kMaxPairingModulus = std::uint64_t{1} << 20;

    explicit ToyGroup(const ToyConfig& config);

    GroupConfig config() const override;

    G1Element identity_g1() const override;
    G2Element identity_g2() const override;
    GtElement identity_gt() const override;

    G1Element pow(const G1Element& base, const Scalar& exp) const override;
    G2Element pow(const G2Element& base, const Scalar& exp) const override;
    G1Element mul(const G1Element& a, const G1Element& b) const override;
    G2Element mul(const G2Element& a, const G2Element& b) const override;
    GtElement pairing(const G1Element& p, const G2Element& q) const override;

    std::size_t g1_size() const noexcept override { return elem_width_; }
    std::size_t g2_size() const noexcept override { return elem_width_; }
    std::size_t gt_size() const noexcept override { return gt_width_; }
    G1Element deserialize_g1(ByteView bytes) const override;
    G2Element deserialize_g2(ByteView bytes) const override;
    GtElement deserialize_gt(ByteView bytes) const override;

    G2Element hash_to_g2(ByteView message, std::string_view domain) const override;
    Scalar share_to_scalar(const G1Element& share) const override;

    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t order() const noexcept { return q_; }
    std::uint64_t value(const Bytes& encoding) const;
    Bytes encode(std::uint64_t v) const;
    // Discrete log base g by table lookup.
    std::uint64_t dlog(std::uint64_t element) const;

private:
    struct Validated {};
    ToyGroup(const ToyConfig& config, Validated);

    std::uint64_t checked_value(ByteView bytes) const;

    std::uint64_t p_;
    std::uint64_t g_;
    std::uint64_t q_;
    std::size_t elem_width_;
    std::size_t gt_width_;
    std::vector<std::uint32_t> dlog_table_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);
// Multiplicative order of g modulo prime p.
std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p);

}  // namespace trc::group
