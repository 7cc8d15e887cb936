// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/group/curve_group.hpp"

#include <blst.h>

#include <algorithm>
#include <array>

#include "trc/common/errors.hpp"
#include "trc/common/hash.hpp"

namespace trc::group {

namespace {

const BigUint& curve_order() {
    static const BigUint r = parse_big("0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
    return r;
}

constexpr std::string_view kShareDomain = "trc/share-to-scalar/bls12-381";

Bytes compress(const blst_p1& p) {
    Bytes out(48);
    blst_p1_compress(out.data(), &p);
    return out;
}

Bytes compress(const blst_p2& p) {
    Bytes out(96);
    blst_p2_compress(out.data(), &p);
    return out;
}

// Decoding of bytes that came out of this backend; still checked because
// a corrupt element must never reach the arithmetic.
blst_p1_affine to_affine(const G1Element& e) {
    blst_p1_affine a;
    if (e.bytes().size() != 48 || blst_p1_uncompress(&a, e.bytes().data()) != BLST_SUCCESS)
        fail(Errc::MalformedEncoding, "invalid G1 element");
    return a;
}

blst_p2_affine to_affine(const G2Element& e) {
    blst_p2_affine a;
    if (e.bytes().size() != 96 || blst_p2_uncompress(&a, e.bytes().data()) != BLST_SUCCESS)
        fail(Errc::MalformedEncoding, "invalid G2 element");
    return a;
}

std::array<std::uint8_t, 32> scalar_le(const Scalar& s) {
    Bytes be = big_to_bytes(s.value() % curve_order(), 32);
    std::array<std::uint8_t, 32> le{};
    std::reverse_copy(be.begin(), be.end(), le.begin());
    return le;
}

Bytes encode_fp12(const blst_fp12& f) {
    Bytes out;
    out.reserve(576);
    for (const auto& f6 : f.fp6) {
        for (const auto& f2 : f6.fp2) {
            for (const auto& fp : f2.fp) {
                std::array<std::uint8_t, 48> buf{};
                blst_bendian_from_fp(buf.data(), &fp);
                out.insert(out.end(), buf.begin(), buf.end());
            }
        }
    }
    return out;
}

GroupParams curve_params() {
    return GroupParams{BackendId::curve, std::string(CurveGroup::kCurveId), curve_order(),
                       G1Element(compress(*blst_p1_generator())), G2Element(compress(*blst_p2_generator()))};
}

}  // namespace

CurveGroup::CurveGroup() : Group(curve_params(), ModRing(curve_order()), ModRing(curve_order())) {}

G1Element CurveGroup::identity_g1() const {
    blst_p1 zero{};
    return G1Element(compress(zero));
}

G2Element CurveGroup::identity_g2() const {
    blst_p2 zero{};
    return G2Element(compress(zero));
}

GtElement CurveGroup::identity_gt() const { return GtElement(encode_fp12(*blst_fp12_one())); }

G1Element CurveGroup::pow(const G1Element& base, const Scalar& exp) const {
    blst_p1_affine a = to_affine(base);
    blst_p1 p, out;
    blst_p1_from_affine(&p, &a);
    auto k = scalar_le(exp);
    blst_p1_mult(&out, &p, k.data(), 255);
    return G1Element(compress(out));
}

G2Element CurveGroup::pow(const G2Element& base, const Scalar& exp) const {
    blst_p2_affine a = to_affine(base);
    blst_p2 p, out;
    blst_p2_from_affine(&p, &a);
    auto k = scalar_le(exp);
    blst_p2_mult(&out, &p, k.data(), 255);
    return G2Element(compress(out));
}

G1Element CurveGroup::mul(const G1Element& a, const G1Element& b) const {
    blst_p1_affine aa = to_affine(a), ba = to_affine(b);
    blst_p1 p, out;
    blst_p1_from_affine(&p, &aa);
    blst_p1_add_or_double_affine(&out, &p, &ba);
    return G1Element(compress(out));
}

G2Element CurveGroup::mul(const G2Element& a, const G2Element& b) const {
    blst_p2_affine aa = to_affine(a), ba = to_affine(b);
    blst_p2 p, out;
    blst_p2_from_affine(&p, &aa);
    blst_p2_add_or_double_affine(&out, &p, &ba);
    return G2Element(compress(out));
}

GtElement CurveGroup::pairing(const G1Element& p, const G2Element& q) const {
    blst_p1_affine pa = to_affine(p);
    blst_p2_affine qa = to_affine(q);
    if (blst_p1_affine_is_inf(&pa) || blst_p2_affine_is_inf(&qa)) return identity_gt();
    blst_fp12 loop, result;
    blst_miller_loop(&loop, &qa, &pa);
    blst_final_exp(&result, &loop);
    return GtElement(encode_fp12(result));
}

G1Element CurveGroup::deserialize_g1(ByteView bytes) const {
    blst_p1_affine a;
    if (bytes.size() != 48 || blst_p1_uncompress(&a, bytes.data()) != BLST_SUCCESS)
        fail(Errc::MalformedEncoding, "not a compressed G1 point");
    if (!blst_p1_affine_in_g1(&a)) fail(Errc::MalformedEncoding, "G1 point outside the prime-order subgroup");
    Bytes canonical(48);
    blst_p1_affine_compress(canonical.data(), &a);
    if (!std::equal(canonical.begin(), canonical.end(), bytes.begin()))
        fail(Errc::MalformedEncoding, "non-canonical G1 encoding");
    return G1Element(std::move(canonical));
}

G2Element CurveGroup::deserialize_g2(ByteView bytes) const {
    blst_p2_affine a;
    if (bytes.size() != 96 || blst_p2_uncompress(&a, bytes.data()) != BLST_SUCCESS)
        fail(Errc::MalformedEncoding, "not a compressed G2 point");
    if (!blst_p2_affine_in_g2(&a)) fail(Errc::MalformedEncoding, "G2 point outside the prime-order subgroup");
    Bytes canonical(96);
    blst_p2_affine_compress(canonical.data(), &a);
    if (!std::equal(canonical.begin(), canonical.end(), bytes.begin()))
        fail(Errc::MalformedEncoding, "non-canonical G2 encoding");
    return G2Element(std::move(canonical));
}

GtElement CurveGroup::deserialize_gt(ByteView bytes) const {
    if (bytes.size() != 576) fail(Errc::MalformedEncoding, "GT element must be 576 bytes");
    blst_fp12 f;
    std::size_t offset = 0;
    for (auto& f6 : f.fp6) {
        for (auto& f2 : f6.fp2) {
            for (auto& fp : f2.fp) {
                blst_fp_from_bendian(&fp, bytes.data() + offset);
                offset += 48;
            }
        }
    }
    Bytes canonical = encode_fp12(f);
    if (!std::equal(canonical.begin(), canonical.end(), bytes.begin()))
        fail(Errc::MalformedEncoding, "non-canonical GT encoding");
    if (!blst_fp12_in_group(&f)) fail(Errc::MalformedEncoding, "Fp12 value outside GT");
    return GtElement(std::move(canonical));
}

G2Element CurveGroup::hash_to_g2(ByteView message, std::string_view domain) const {
    blst_p2 out;
    blst_hash_to_g2(&out, message.data(), message.size(), reinterpret_cast<const std::uint8_t*>(domain.data()),
                    domain.size(), nullptr, 0);
    return G2Element(compress(out));
}

Scalar CurveGroup::share_to_scalar(const G1Element& share) const {
    Bytes input(kShareDomain.begin(), kShareDomain.end());
    input.insert(input.end(), share.bytes().begin(), share.bytes().end());
    return share_field().reduce_bytes(sha512(input));
}

}  // namespace trc::group
