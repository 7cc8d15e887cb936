// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "trc/common/errors.hpp"
#include "trc/group/curve_group.hpp"
#include "trc/group/toy_group.hpp"

using namespace trc;
using namespace trc::group;

namespace {

// Independent of the backend: order and discrete log by repeated
// multiplication.
std::uint64_t brute_order(std::uint64_t g, std::uint64_t p) {
    std::uint64_t x = g % p, k = 1;
    while (x != 1) {
        x = x * g % p;
        ++k;
    }
    return k;
}

std::uint64_t brute_dlog(std::uint64_t g, std::uint64_t y, std::uint64_t p) {
    std::uint64_t x = 1;
    for (std::uint64_t e = 0; e < p; ++e) {
        if (x == y) return e;
        x = x * g % p;
    }
    throw std::logic_error("not in subgroup");
}

G1Element toy_g1(const Group& grp, std::uint64_t v) { return grp.deserialize_g1(Bytes{static_cast<std::uint8_t>(v)}); }
G2Element toy_g2(const Group& grp, std::uint64_t v) { return grp.deserialize_g2(Bytes{static_cast<std::uint8_t>(v)}); }
std::uint64_t gt_value(const GtElement& e) { return e.bytes().at(0); }

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected trc::Error");
    return Errc::IoError;
}

}  // namespace

TEST_CASE("toy parameters are validated against the generator order") {
    auto grp = make_group(ToyConfig{23, 11, {}});
    CHECK(grp->params().group_order == 22);
    CHECK(brute_order(11, 23) == 22);
    CHECK(grp->params().backend_id == BackendId::toy);
    CHECK(grp->g1() == toy_g1(*grp, 11));

    CHECK(error_of([] { make_group(ToyConfig{23, 1, {}}); }) == Errc::NonGenerator);

    auto small = make_group(ToyConfig{7, 3, {}});
    CHECK(small->params().group_order == brute_order(3, 7));
    CHECK(small->params().group_order == 6);

    // 2 generates the index-2 subgroup of Z_23^*.
    CHECK(brute_order(2, 23) == 11);
    CHECK(make_group(ToyConfig{23, 2, 11})->params().group_order == 11);
    CHECK(error_of([] { make_group(ToyConfig{23, 2, {}}); }) == Errc::NonGenerator);
    CHECK(error_of([] { make_group(ToyConfig{21, 2, {}}); }) == Errc::InvalidArgument);
    CHECK(error_of([] { make_group(CurveConfig{"bn254"}); }) == Errc::UnsupportedCurve);
}

TEST_CASE("toy exponentiation reproduces the worked numbers") {
    auto grp = make_group(ToyConfig{23, 11, {}});
    const auto& zq = grp->exponents();
    CHECK(grp->pow(grp->g1(), zq.from_u64(3)) == toy_g1(*grp, 20));
    CHECK(grp->pow(toy_g1(*grp, 20), zq.from_u64(7)) == toy_g1(*grp, 21));
    CHECK(grp->pow(grp->g1(), zq.from_u64(0)) == grp->identity_g1());
    CHECK(grp->pow(grp->g1(), zq.from_u64(1)) == grp->g1());
}

TEST_CASE("toy pairing matches the discrete-log product oracle") {
    auto grp = make_group(ToyConfig{23, 11, {}});
    const auto& zq = grp->exponents();

    CHECK(brute_dlog(11, 21, 23) == 21);
    CHECK(brute_dlog(11, 20, 23) == 3);
    CHECK(brute_dlog(11, 7, 23) == 7);
    auto lhs = grp->pairing(toy_g1(*grp, 21), toy_g2(*grp, 11));
    auto rhs = grp->pairing(toy_g1(*grp, 20), toy_g2(*grp, 7));
    CHECK(lhs == rhs);
    CHECK(gt_value(lhs) == 21);

    CHECK(grp->pairing(grp->identity_g1(), toy_g2(*grp, 13)) == grp->identity_gt());

    auto honest = grp->pairing(toy_g1(*grp, 7), grp->g2());
    auto framed = grp->pairing(grp->g1(), grp->pow(grp->g2(), zq.from_u64(5)));
    CHECK(gt_value(honest) == 7);
    CHECK(gt_value(framed) == 5);
    CHECK(honest != framed);

    for (std::uint64_t a = 1; a < 23; ++a) {
        for (std::uint64_t b = 1; b < 23; ++b) {
            auto expected = brute_dlog(11, a, 23) * brute_dlog(11, b, 23) % 22;
            REQUIRE(gt_value(grp->pairing(toy_g1(*grp, a), toy_g2(*grp, b))) == expected);
        }
    }
}

TEST_CASE("toy pairing refuses groups beyond the exhaustive bound") {
    // 1048583 is the first prime above 2^20; 5 is a primitive root.
    auto grp = make_group(ToyConfig{1048583, 5, {}});
    CHECK(grp->pow(grp->g1(), grp->exponents().from_u64(2)) != grp->g1());
    CHECK(error_of([&] { grp->pairing(grp->g1(), grp->g2()); }) == Errc::ToyGroupTooLarge);
}

TEST_CASE("toy encodings are fixed-width big-endian and canonical") {
    auto grp = make_group(ToyConfig{23, 11, {}});
    auto e = grp->deserialize_g1(Bytes{22});
    CHECK(e.bytes() == Bytes{0x16});
    CHECK(grp->g1_size() == 1);
    CHECK(error_of([&] { grp->deserialize_g1(Bytes{0}); }) == Errc::MalformedEncoding);
    CHECK(error_of([&] { grp->deserialize_g1(Bytes{23}); }) == Errc::MalformedEncoding);
    CHECK(error_of([&] { grp->deserialize_g1(Bytes{0, 5}); }) == Errc::MalformedEncoding);
    CHECK(error_of([&] { grp->deserialize_gt(Bytes{22}); }) == Errc::MalformedEncoding);

    auto big = make_group(ToyConfig{1000003, 2, {}});
    CHECK(big->g1_size() == 3);
    CHECK(big->g1().bytes() == Bytes{0, 0, 2});

    // Subgroup membership is part of validity.
    auto sub = make_group(ToyConfig{23, 2, 11});
    CHECK(error_of([&] { sub->deserialize_g1(Bytes{5}); }) == Errc::MalformedEncoding);
    CHECK_NOTHROW(sub->deserialize_g1(Bytes{4}));
}

TEST_CASE("exponent homomorphism and bilinearity hold on both backends") {
    auto backend = GENERATE(as<std::string>{}, "toy", "curve");
    GroupPtr grp = backend == "toy" ? make_group(ToyConfig{1009, 11, {}}) : make_group(CurveConfig{});
    HashDrbg drbg(backend == "toy" ? 1 : 2, "group-properties");
    const auto& zq = grp->exponents();

    for (int i = 0; i < 1000; ++i) {
        Scalar a = zq.random(drbg), b = zq.random(drbg);
        REQUIRE(grp->pow(grp->g1(), zq.add(a, b)) == grp->mul(grp->pow(grp->g1(), a), grp->pow(grp->g1(), b)));
        if (i % 10 == 0) {
            REQUIRE(grp->pow(grp->pow(grp->g2(), a), b) == grp->pow(grp->g2(), zq.mul(a, b)));
        }
    }
    for (int i = 0; i < 100; ++i) {
        Scalar a = zq.random_nonzero(drbg);
        REQUIRE(grp->pairing(grp->pow(grp->g1(), a), grp->g2()) == grp->pairing(grp->g1(), grp->pow(grp->g2(), a)));
    }
}

TEST_CASE("curve backend basics") {
    auto grp = make_group(CurveConfig{});
    const auto& r = grp->params().group_order;
    CHECK(grp->backend() == BackendId::curve);
    CHECK(grp->exponents().byte_width() == 32);
    CHECK(grp->g1().bytes().size() == 48);
    CHECK(grp->g2().bytes().size() == 96);
    CHECK(grp->pow(grp->g1(), Scalar(r - 1)) != grp->identity_g1());
    CHECK(grp->mul(grp->pow(grp->g1(), Scalar(r - 1)), grp->g1()) == grp->identity_g1());
    CHECK(grp->pow(grp->g1(), Scalar(0)) == grp->identity_g1());
    CHECK(grp->pairing(grp->identity_g1(), grp->g2()) == grp->identity_gt());
    CHECK(grp->pairing(grp->g1(), grp->g2()) != grp->identity_gt());

    Bytes bad = grp->g1().bytes();
    bad[47] ^= 1;
    CHECK_THROWS_AS(grp->deserialize_g1(bad), Error);
    CHECK(error_of([&] { grp->deserialize_g1(Bytes(47, 0)); }) == Errc::MalformedEncoding);
    Bytes gt = grp->pairing(grp->g1(), grp->g2()).bytes();
    CHECK(grp->deserialize_gt(gt).bytes() == gt);
    gt[100] ^= 0x40;
    CHECK(error_of([&] { grp->deserialize_gt(gt); }) == Errc::MalformedEncoding);
}

TEST_CASE("curve encodings round-trip for random elements") {
    auto grp = make_group(CurveConfig{});
    HashDrbg drbg(3, "curve-roundtrip");
    for (int i = 0; i < 50; ++i) {
        Scalar a = grp->exponents().random(drbg);
        auto p1 = grp->pow(grp->g1(), a);
        auto p2 = grp->pow(grp->g2(), a);
        REQUIRE(grp->deserialize_g1(p1.bytes()) == p1);
        REQUIRE(grp->deserialize_g2(p2.bytes()) == p2);
    }
    REQUIRE(grp->deserialize_g1(grp->identity_g1().bytes()) == grp->identity_g1());
    REQUIRE(grp->deserialize_g2(grp->identity_g2().bytes()) == grp->identity_g2());
}

TEST_CASE("hash_to_g2 is deterministic and never the identity") {
    for (GroupPtr grp : {make_group(ToyConfig{23, 11, {}}), make_group(CurveConfig{})}) {
        auto a = grp->hash_to_g2(as_bytes("abc"), "test");
        CHECK(a == grp->hash_to_g2(as_bytes("abc"), "test"));
        CHECK(a != grp->identity_g2());
        CHECK(a != grp->hash_to_g2(as_bytes("abd"), "test"));
    }
}
