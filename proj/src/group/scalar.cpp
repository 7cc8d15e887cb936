// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/group/scalar.hpp"

#include <iterator>

#include "trc/common/errors.hpp"

namespace trc::group {

namespace mp = boost::multiprecision;

Bytes big_to_bytes(const BigUint& v, std::size_t width) {
    Bytes raw;
    if (!v.is_zero()) mp::export_bits(v, std::back_inserter(raw), 8, true);
    if (raw.size() > width) fail(Errc::MalformedEncoding, "integer does not fit in " + std::to_string(width) + " bytes");
    Bytes out(width - raw.size(), 0);
    out.insert(out.end(), raw.begin(), raw.end());
    return out;
}

BigUint bytes_to_big(ByteView be) {
    BigUint v;
    if (!be.empty()) mp::import_bits(v, be.begin(), be.end(), 8, true);
    return v;
}

BigUint parse_big(std::string_view text) {
    if (text.empty()) fail(Errc::InvalidArgument, "empty integer literal");
    BigUint v;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        std::string_view digits = text.substr(2);
        if (digits.size() % 2) return parse_big("0x0" + std::string(digits));
        return bytes_to_big(from_hex(digits));
    }
    for (char c : text) {
        if (c < '0' || c > '9') fail(Errc::InvalidArgument, "bad integer literal '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

ModRing::ModRing(BigUint modulus) : modulus_(std::move(modulus)) {
    if (modulus_ < 2) fail(Errc::InvalidArgument, "modulus must be at least 2");
    BigUint top = modulus_ - 1;
    bits_ = static_cast<unsigned>(mp::msb(top)) + 1;
    width_ = (bits_ + 7) / 8;
}

Scalar ModRing::reduce(const BigUint& v) const {
    BigUint r = v % modulus_;
    if (r < 0) r += modulus_;
    return Scalar(std::move(r));
}

Scalar ModRing::reduce_bytes(ByteView be) const { return reduce(bytes_to_big(be)); }

Scalar ModRing::add(const Scalar& a, const Scalar& b) const { return reduce(a.value() + b.value()); }

Scalar ModRing::sub(const Scalar& a, const Scalar& b) const { return reduce(a.value() + modulus_ - b.value()); }

Scalar ModRing::mul(const Scalar& a, const Scalar& b) const { return reduce(a.value() * b.value()); }

Scalar ModRing::neg(const Scalar& a) const { return reduce(modulus_ - a.value()); }

Scalar ModRing::pow(const Scalar& base, const BigUint& exponent) const {
    return Scalar(mp::powm(base.value(), exponent, modulus_));
}

Scalar ModRing::inverse(const Scalar& a) const {
    // Extended Euclid; works for any modulus as long as gcd(a, m) = 1.
    BigUint old_r = a.value() % modulus_, r = modulus_;
    BigUint old_s = 1, s = 0;
    while (!r.is_zero()) {
        BigUint q = old_r / r;
        BigUint tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) fail(Errc::InvalidArgument, "element " + a.to_string() + " is not invertible");
    return reduce(old_s);
}

Bytes ModRing::encode(const Scalar& s) const {
    if (!contains(s)) fail(Errc::InvalidArgument, "scalar not reduced");
    return big_to_bytes(s.value(), width_);
}

Scalar ModRing::decode(ByteView bytes) const {
    if (bytes.size() != width_) fail(Errc::MalformedEncoding, "scalar encoding has wrong width");
    BigUint v = bytes_to_big(bytes);
    if (v >= modulus_) fail(Errc::MalformedEncoding, "scalar out of range");
    return Scalar(std::move(v));
}

Scalar ModRing::random(HashDrbg& drbg) const {
    unsigned excess = static_cast<unsigned>(width_ * 8 - bits_);
    for (;;) {
        Bytes raw = drbg.next_bytes(width_);
        raw[0] &= static_cast<std::uint8_t>(0xff >> excess);
        BigUint v = bytes_to_big(raw);
        if (v < modulus_) return Scalar(std::move(v));
    }
}

Scalar ModRing::random_nonzero(HashDrbg& drbg) const {
    for (;;) {
        Scalar s = random(drbg);
        if (!s.is_zero()) return s;
    }
}

}  // namespace trc::group
