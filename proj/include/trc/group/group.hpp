// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "trc/common/bytes.hpp"
#include "trc/group/scalar.hpp"

namespace trc::group {

enum class BackendId { toy, curve };

std::string_view to_string(BackendId id) noexcept;

/// A group element held in its canonical byte encoding. Instances obtained
/// from a Group are always valid; use Group::deserialize_* for untrusted
/// bytes.
template <class Tag>
class Element {
public:
    Element() = default;
    explicit Element(Bytes canonical) : bytes_(std::move(canonical)) {}

    const Bytes& bytes() const noexcept { return bytes_; }
    std::string hex() const { return to_hex(bytes_); }

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;

private:
    Bytes bytes_;
};

struct G1Tag {};
struct G2Tag {};
struct GtTag {};
using G1Element = Element<G1Tag>;
using G2Element = Element<G2Tag>;
using GtElement = Element<GtTag>;

struct ToyConfig {
    std::uint64_t p = 23;
    std::uint64_t g = 11;
    // Defaults to p - 1, i.e. g must be a primitive root.
    std::optional<std::uint64_t> order;
};

struct CurveConfig {
    std::string curve = "bls12-381";
};

using GroupConfig = std::variant<ToyConfig, CurveConfig>;

struct GroupParams {
    BackendId backend_id;
    std::string modulus_or_curve_id;
    BigUint group_order;
    G1Element g1;
    G2Element g2;
};

/// Cyclic groups G1, G2, GT with a bilinear map e: G1 x G2 -> GT.
///
/// Two rings are exposed: exponents() is Z_order, where secret keys and the
/// client randomness r live; share_field() is the prime field in which the
/// sharing polynomial is interpolated (Z_p for the toy group, Z_r for the
/// curve).
class Group {
public:
    virtual ~Group() = default;

    const GroupParams& params() const noexcept { return params_; }
    BackendId backend() const noexcept { return params_.backend_id; }
    const ModRing& exponents() const noexcept { return exponents_; }
    const ModRing& share_field() const noexcept { return share_field_; }
    virtual GroupConfig config() const = 0;

    const G1Element& g1() const noexcept { return params_.g1; }
    const G2Element& g2() const noexcept { return params_.g2; }
    virtual G1Element identity_g1() const = 0;
    virtual G2Element identity_g2() const = 0;
    virtual GtElement identity_gt() const = 0;

    virtual G1Element pow(const G1Element& base, const Scalar& exp) const = 0;
    virtual G2Element pow(const G2Element& base, const Scalar& exp) const = 0;
    virtual G1Element mul(const G1Element& a, const G1Element& b) const = 0;
    virtual G2Element mul(const G2Element& a, const G2Element& b) const = 0;
    virtual GtElement pairing(const G1Element& p, const G2Element& q) const = 0;

    virtual std::size_t g1_size() const noexcept = 0;
    virtual std::size_t g2_size() const noexcept = 0;
    virtual std::size_t gt_size() const noexcept = 0;
    virtual G1Element deserialize_g1(ByteView bytes) const = 0;
    virtual G2Element deserialize_g2(ByteView bytes) const = 0;
    virtual GtElement deserialize_gt(ByteView bytes) const = 0;

    virtual G2Element hash_to_g2(ByteView message, std::string_view domain) const = 0;

    // Maps a revealed share onto the interpolation field. Toy: the element's
    // integer value. Curve: SHA-512 of the compressed encoding, reduced.
    virtual Scalar share_to_scalar(const G1Element& share) const = 0;

protected:
    Group(GroupParams params, ModRing exponents, ModRing share_field)
        : params_(std::move(params)), exponents_(std::move(exponents)), share_field_(std::move(share_field)) {}

private:
    GroupParams params_;
    ModRing exponents_;
    ModRing share_field_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Validates the configuration: NonGenerator, UnsupportedCurve,
// InvalidArgument (non-prime toy modulus).
GroupPtr make_group(const GroupConfig& config);

}  // namespace trc::group
