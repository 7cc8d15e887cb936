// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "trc/common/bytes.hpp"
#include "trc/common/drbg.hpp"

namespace trc::group {

using BigUint = boost::multiprecision::cpp_int;

/// An integer already reduced into some ModRing. The ring is not carried
/// along; callers keep track of which ring (exponents or share field) a
/// scalar belongs to.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(BigUint value) : value_(std::move(value)) {}

    const BigUint& value() const noexcept { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    std::string to_string() const { return value_.str(); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.value_ < b.value_; }

private:
    BigUint value_;
};

/// Integers modulo a fixed modulus with a canonical fixed-width big-endian
/// encoding (width = bytes needed for modulus - 1, at least one).
class ModRing {
public:
    explicit ModRing(BigUint modulus);

    const BigUint& modulus() const noexcept { return modulus_; }
    std::size_t byte_width() const noexcept { return width_; }

    Scalar reduce(const BigUint& v) const;
    Scalar from_u64(std::uint64_t v) const { return reduce(BigUint(v)); }
    // Big-endian integer of any length reduced mod the modulus.
    Scalar reduce_bytes(ByteView be) const;
    bool contains(const Scalar& s) const { return s.value() >= 0 && s.value() < modulus_; }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar pow(const Scalar& base, const BigUint& exponent) const;
    // Throws InvalidArgument when a shares a factor with the modulus.
    Scalar inverse(const Scalar& a) const;

    Bytes encode(const Scalar& s) const;
    // Rejects wrong width and values >= modulus (MalformedEncoding).
    Scalar decode(ByteView bytes) const;

    // Uniform sampling by rejection on the DRBG stream.
    Scalar random(HashDrbg& drbg) const;
    Scalar random_nonzero(HashDrbg& drbg) const;

    friend bool operator==(const ModRing& a, const ModRing& b) { return a.modulus_ == b.modulus_; }

private:
    BigUint modulus_;
    std::size_t width_;
    unsigned bits_;
};

Bytes big_to_bytes(const BigUint& v, std::size_t width);
BigUint bytes_to_big(ByteView be);
// Decimal or 0x-prefixed hex; throws InvalidArgument.
BigUint parse_big(std::string_view text);

}  // namespace trc::group
