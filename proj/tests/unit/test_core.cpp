// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "trc/common/errors.hpp"
#include "trc/core/cipher.hpp"
#include "trc/core/codec.hpp"
#include "trc/core/keys.hpp"
#include "trc/core/polynomial.hpp"
#include "trc/core/protocol.hpp"

using namespace trc;
using namespace trc::core;
using trc::group::BigUint;
using trc::group::make_group;
using trc::group::ToyConfig;
using trc::group::CurveConfig;
using trc::group::GroupPtr;
namespace oracle = trc::testing;

namespace {

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected trc::Error");
    return Errc::IoError;
}

std::uint64_t toy_value(const G1Element& e) {
    std::uint64_t v = 0;
    for (auto b : e.bytes()) v = v << 8 | b;
    return v;
}

Bytes text(std::string_view s) {
    auto v = as_bytes(s);
    return Bytes(v.begin(), v.end());
}

Scalar sc(std::uint64_t v) { return Scalar(BigUint(v)); }

struct WorkedExample {
    GroupPtr grp = make_group(ToyConfig{23, 11, {}});
    std::vector<KeyPair> keys;
    std::vector<G1Element> pks;
    TimelockRequest req;
    Bytes message = text("meet at noon");

    WorkedExample() {
        std::uint32_t i = 1;
        for (std::uint64_t sk : {3, 4, 5, 6}) {
            keys.push_back(keypair_from_secret(*grp, sc(sk), i++));
            pks.push_back(keys.back().pk);
        }
        req = build_request(*grp, sc(22), sc(7), message, 1700000000, pks, 3);
    }

    SecretShare share(std::uint32_t i) const { return derive_share(*grp, req, keys.at(i - 1)); }
};

std::uint64_t mask_value(const TimelockRequest& req, std::uint32_t i) {
    for (auto& m : req.masks)
        if (m.index == i) {
            std::uint64_t v = 0;
            for (auto b : m.alpha) v = v << 8 | b;
            return v;
        }
    throw std::logic_error("no mask");
}

}  // namespace

TEST_CASE("keygen: forced secrets reproduce the worked example keys") {
    auto grp = make_group(ToyConfig{23, 11, {}});
    CHECK(toy_value(keypair_from_secret(*grp, sc(3)).pk) == 20);
    CHECK(toy_value(keypair_from_secret(*grp, sc(6)).pk) == 9);
    CHECK(keypair_from_secret(*grp, sc(1)).pk == grp->g1());
    for (std::uint64_t sk = 1; sk < 22; ++sk)
        CHECK(toy_value(keypair_from_secret(*grp, sc(sk)).pk) == oracle::ipow(11, sk, 23));
    CHECK(error_of([&] { keypair_from_secret(*grp, sc(0)); }) == Errc::InvalidArgument);
    CHECK(error_of([&] { keypair_from_secret(*grp, sc(22)); }) == Errc::InvalidArgument);
}

TEST_CASE("keygen: seeded generation is deterministic and in range") {
    auto grp = make_group(ToyConfig{1009, 11, {}});
    CHECK(error_of([&] { keygen(*grp, 0); }) == Errc::InvalidArgument);
    std::set<BigUint> seen;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto kp = keygen(*grp, seed, 4);
        CHECK(kp.index == 4);
        CHECK(kp.sk == keygen(*grp, seed).sk);
        CHECK(!kp.sk.is_zero());
        CHECK(kp.sk.value() < 1008);
        CHECK(toy_value(kp.pk) == oracle::ipow(11, static_cast<std::uint64_t>(kp.sk.value()), 1009));
        seen.insert(kp.sk.value());
    }
    CHECK(seen.size() > 150);
}

TEST_CASE("possession proofs bind the key") {
    for (auto grp : {make_group(ToyConfig{1009, 11, {}}), make_group(CurveConfig{})}) {
        auto a = keygen(*grp, 11), b = keygen(*grp, 12);
        CHECK(verify_possession(*grp, a.pk, prove_possession(*grp, a)));
        CHECK_FALSE(verify_possession(*grp, b.pk, prove_possession(*grp, a)));
        CHECK_FALSE(verify_possession(*grp, grp->identity_g1(), grp->identity_g2()));
    }
}

TEST_CASE("share_to_scalar") {
    auto toy = make_group(ToyConfig{23, 11, {}});
    CHECK(toy->share_to_scalar(toy->deserialize_g1(Bytes{21})) == sc(21));
    CHECK(toy->share_to_scalar(toy->identity_g1()) == sc(1));

    auto curve = make_group(CurveConfig{});
    HashDrbg drbg(99, "test/share-to-scalar");
    std::set<Bytes> elements;
    std::set<BigUint> scalars;
    for (int i = 0; i < 10000; ++i) {
        auto e = curve->pow(curve->g1(), curve->exponents().random_nonzero(drbg));
        auto s = curve->share_to_scalar(e);
        CHECK(curve->share_field().contains(s));
        CHECK(curve->share_to_scalar(e) == s);
        elements.insert(e.bytes());
        scalars.insert(s.value());
    }
    CHECK(scalars.size() == elements.size());
}

TEST_CASE("lagrange_interpolate") {
    group::ModRing f23(23);
    std::vector<Point> pts{{sc(0), sc(22)}, {sc(1), sc(21)}, {sc(2), sc(9)}};
    auto poly = lagrange_interpolate(f23, pts);
    CHECK(poly == Polynomial{{sc(22), sc(16), sc(6)}});
    CHECK(oracle::search_coefficients({{0, 22}, {1, 21}, {2, 9}}, 23) == std::vector<std::uint64_t>{22, 16, 6});

    std::vector<Point> single{{sc(5), sc(9)}};
    CHECK(lagrange_interpolate(f23, single) == Polynomial{{sc(9)}});

    std::vector<Point> dup{{sc(1), sc(2)}, {sc(1), sc(3)}};
    CHECK(error_of([&] { lagrange_interpolate(f23, dup); }) == Errc::DuplicateX);
    CHECK(error_of([&] { lagrange_interpolate(f23, std::span<const Point>{}); }) == Errc::InvalidArgument);
    std::vector<Point> wrapped{{sc(1), sc(2)}, {sc(24), sc(3)}};
    CHECK(error_of([&] { lagrange_interpolate(f23, wrapped); }) == Errc::DuplicateX);
}

TEST_CASE("lagrange_interpolate: degree-4 round trip", "[property]") {
    std::mt19937_64 rng(7);
    for (auto grp : {make_group(ToyConfig{1009, 11, {}}), make_group(CurveConfig{})}) {
        const auto& field = grp->share_field();
        HashDrbg drbg(5, "test/poly");
        for (int trial = 0; trial < 200; ++trial) {
            Polynomial orig;
            for (int d = 0; d < 5; ++d) orig.coefficients.push_back(field.random(drbg));
            std::vector<Point> pts;
            std::set<std::uint64_t> xs;
            while (xs.size() < 5) xs.insert(rng() % 1000 + 1);
            for (auto x : xs) pts.push_back({field.from_u64(x), poly_eval(field, orig, field.from_u64(x))});
            CHECK(lagrange_interpolate(field, pts) == orig);
        }
    }
}

TEST_CASE("lagrange_interpolate agrees with the basis-formula oracle", "[property]") {
    group::ModRing f(1009);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t m = rng() % 6 + 1;
        std::set<std::uint64_t> xs;
        while (xs.size() < m) xs.insert(rng() % 1009);
        std::vector<Point> pts;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
        for (auto x : xs) {
            auto y = rng() % 1009;
            pts.push_back({sc(x), sc(y)});
            raw.emplace_back(x, y);
        }
        auto poly = lagrange_interpolate(f, pts);
        CHECK(poly.coefficients.size() == m);
        auto probe = rng() % 1009;
        CHECK(poly_eval(f, poly, sc(probe)) == sc(oracle::lagrange_at(raw, probe, 1009)));
    }
}

TEST_CASE("poly_eval") {
    group::ModRing f23(23);
    Polynomial p{{sc(22), sc(16), sc(6)}};
    CHECK(poly_eval(f23, p, sc(3)) == sc(9));
    CHECK(poly_eval(f23, p, sc(4)) == sc(21));
    CHECK(poly_eval(f23, p, sc(0)) == sc(22));
    for (std::uint64_t x = 0; x < 23; ++x) CHECK(poly_eval(f23, p, sc(x)) == sc(oracle::naive_eval({22, 16, 6}, x, 23)));
}

TEST_CASE("cipher") {
    group::ModRing f(1009);
    auto k = sc(77);
    std::mt19937_64 rng(3);
    for (std::size_t len : {0, 1, 31, 32, 33, 100, 1000}) {
        Bytes m(len);
        for (auto& b : m) b = static_cast<std::uint8_t>(rng());
        auto c = encrypt_message(f, k, m);
        CHECK(c.size() == len + kCipherTagSize);
        CHECK(decrypt_message(f, k, c) == m);
        CHECK(error_of([&] { decrypt_message(f, sc(78), c); }) == Errc::AuthenticationFailed);
    }
    Bytes m = text("attack at dawn");
    auto c = encrypt_message(f, k, m);
    for (std::size_t bit = 0; bit < c.size() * 8; ++bit) {
        auto tampered = c;
        tampered[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        CHECK(error_of([&] { decrypt_message(f, k, tampered); }) == Errc::AuthenticationFailed);
    }
    CHECK(error_of([&] { decrypt_message(f, k, Bytes(5)); }) == Errc::AuthenticationFailed);
}

TEST_CASE("build_request reproduces the worked example") {
    WorkedExample ex;
    CHECK(toy_value(ex.req.commitment_a) == 7);
    CHECK(toy_value(ex.grp->deserialize_g1(ex.req.commitment_b.bytes())) == oracle::ipow(11, 7, 23));
    REQUIRE(ex.req.masks.size() == 2);
    CHECK(mask_value(ex.req, 3) == 24);
    CHECK(mask_value(ex.req, 4) == 17);
    CHECK(ex.req.threshold == 3);
    CHECK(ex.req.holders == 4);
    CHECK(sharing_polynomial(*ex.grp, sc(22), sc(7), ex.pks, 3) == Polynomial{{sc(22), sc(16), sc(6)}});
    CHECK(decrypt_message(ex.grp->share_field(), sc(22), ex.req.ciphertext) == ex.message);
    CHECK_NOTHROW(validate_request(*ex.grp, ex.req));

    // Masks computed by hand: P(i) xor s_i with s_i = pk_i^7.
    for (std::uint32_t i = 3; i <= 4; ++i) {
        auto s = oracle::ipow(toy_value(ex.pks[i - 1]), 7, 23);
        CHECK(mask_value(ex.req, i) == (oracle::naive_eval({22, 16, 6}, i, 23) ^ s));
    }
}

TEST_CASE("build_request: mask count and errors") {
    WorkedExample ex;
    auto full = build_request(*ex.grp, sc(22), sc(7), ex.message, 0, ex.pks, 4);
    REQUIRE(full.masks.size() == 1);
    CHECK(full.masks[0].index == 4);
    auto one = build_request(*ex.grp, sc(22), sc(7), ex.message, 0, ex.pks, 1);
    CHECK(one.masks.size() == 4);

    CHECK(error_of([&] { build_request(*ex.grp, sc(22), sc(7), ex.message, 0, ex.pks, 0); }) ==
          Errc::ThresholdOutOfRange);
    CHECK(error_of([&] { build_request(*ex.grp, sc(22), sc(7), ex.message, 0, ex.pks, 5); }) ==
          Errc::ThresholdOutOfRange);
    std::vector<G1Element> lone{ex.pks[0]};
    CHECK(error_of([&] { build_request(*ex.grp, sc(22), sc(7), ex.message, 0, lone, 1); }) ==
          Errc::ThresholdOutOfRange);
    auto dup = ex.pks;
    dup[2] = dup[0];
    CHECK(error_of([&] { build_request(*ex.grp, sc(22), sc(7), ex.message, 0, dup, 3); }) ==
          Errc::DuplicateHolderKey);
    CHECK(error_of([&] { build_request(*ex.grp, sc(0), sc(7), ex.message, 0, ex.pks, 3); }) ==
          Errc::InvalidArgument);
    CHECK(error_of([&] { build_request(*ex.grp, sc(22), sc(0), ex.message, 0, ex.pks, 3); }) ==
          Errc::InvalidArgument);
}

TEST_CASE("validate_request rejects tampering") {
    WorkedExample ex;
    auto bad = ex.req;
    bad.masks.pop_back();
    CHECK(error_of([&] { validate_request(*ex.grp, bad); }) == Errc::MalformedRequest);
    bad = ex.req;
    bad.decrypt_time += 1;
    CHECK(error_of([&] { validate_request(*ex.grp, bad); }) == Errc::MalformedRequest);
    bad = ex.req;
    bad.masks[0].alpha.push_back(0);
    CHECK(error_of([&] { validate_request(*ex.grp, bad); }) == Errc::MalformedRequest);
}

TEST_CASE("derive_share") {
    WorkedExample ex;
    CHECK(toy_value(ex.share(1).value) == 21);
    CHECK(toy_value(ex.share(3).value) == 17);
    std::vector<std::uint64_t> expected{21, 9, 17, 4};
    for (std::uint32_t i = 1; i <= 4; ++i) {
        CHECK(ex.share(i).holder_index == i);
        CHECK(toy_value(ex.share(i).value) == expected[i - 1]);
        CHECK(toy_value(ex.share(i).value) == oracle::ipow(7, 2 + i, 23));
    }
    auto outsider = ex.keys[0];
    outsider.index = 5;
    CHECK(error_of([&] { derive_share(*ex.grp, ex.req, outsider); }) == Errc::IndexOutOfRange);
    outsider.index = 0;
    CHECK(error_of([&] { derive_share(*ex.grp, ex.req, outsider); }) == Errc::IndexOutOfRange);
}

TEST_CASE("verify_share verdicts") {
    WorkedExample ex;
    auto s1 = ex.share(1);
    CHECK(verify_share(*ex.grp, s1, ex.pks[0], ex.req) == ShareVerdict::Valid);
    auto tampered = s1;
    tampered.value = ex.grp->deserialize_g1(Bytes{20});
    CHECK(verify_share(*ex.grp, tampered, ex.pks[0], ex.req) == ShareVerdict::InvalidShare);

    auto framed = ex.req;
    framed.commitment_b = ex.grp->pow(ex.grp->g2(), sc(5));
    CHECK(verify_share(*ex.grp, s1, ex.pks[0], framed) == ShareVerdict::DishonestClient);
}

TEST_CASE("verify_share: a flipped bit never verifies", "[property]") {
    for (auto grp : {make_group(ToyConfig{1000003, 2, {}}), make_group(CurveConfig{})}) {
        std::vector<KeyPair> keys;
        std::vector<G1Element> pks;
        for (std::uint32_t i = 1; i <= 3; ++i) {
            keys.push_back(keygen(*grp, 100 + i, i));
            pks.push_back(keys.back().pk);
        }
        HashDrbg drbg(1, "test/flip");
        auto req = build_request(*grp, grp->share_field().random_nonzero(drbg), grp->exponents().random_nonzero(drbg),
                                 text("x"), 0, pks, 2);
        for (std::uint32_t i = 1; i <= 3; ++i) {
            auto share = derive_share(*grp, req, keys[i - 1]);
            REQUIRE(verify_share(*grp, share, pks[i - 1], req) == ShareVerdict::Valid);
            auto raw = share.value.bytes();
            int checked = 0;
            for (std::size_t bit = 0; bit < raw.size() * 8; ++bit) {
                auto flipped = raw;
                flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
                G1Element candidate;
                try {
                    candidate = grp->deserialize_g1(flipped);
                } catch (const Error&) {
                    continue;  // not a group element at all: rejected at decode
                }
                ++checked;
                CHECK(verify_share(*grp, SecretShare{i, candidate}, pks[i - 1], req) != ShareVerdict::Valid);
            }
            if (grp->backend() == group::BackendId::toy) CHECK(checked > 0);
        }
    }
}

TEST_CASE("verify_share: honest holders are never blamed", "[property]") {
    // Exhaustive over the commitments a = g^r and b = g^r' in the worked
    // example group. The holder always derives s = a^sk.
    auto grp = make_group(ToyConfig{23, 11, {}});
    WorkedExample ex;
    for (std::uint64_t r = 1; r <= 21; ++r) {
        for (std::uint64_t r2 = 1; r2 <= 21; ++r2) {
            auto req = ex.req;
            req.commitment_a = grp->pow(grp->g1(), sc(r));
            req.commitment_b = grp->pow(grp->g2(), sc(r2));
            for (const auto& kp : ex.keys) {
                auto share = derive_share(*grp, req, kp);
                auto v = verify_share(*grp, share, kp.pk, req);
                CHECK(v != ShareVerdict::InvalidShare);
                // The order 22 is composite: an even sk cannot tell r from
                // r + 11, so a mismatched commitment can still pass.
                auto sk = static_cast<std::uint64_t>(kp.sk.value());
                bool blind = sk * r % 22 == sk * r2 % 22;
                CHECK((v == ShareVerdict::Valid) == blind);
                if (r == r2) CHECK(v == ShareVerdict::Valid);
            }
        }
    }
}

TEST_CASE("verify_share: prime order separates every mismatched commitment", "[property]") {
    // p = 47 = 2*23 + 1 and g = 2 generates the subgroup of prime order 23.
    auto grp = make_group(ToyConfig{47, 2, 23});
    std::vector<G1Element> pks;
    std::vector<KeyPair> keys;
    for (std::uint32_t i = 1; i <= 3; ++i) {
        keys.push_back(keypair_from_secret(*grp, sc(i + 1), i));
        pks.push_back(keys.back().pk);
    }
    auto base = build_request(*grp, sc(5), sc(3), text("m"), 0, pks, 2);
    for (std::uint64_t r = 1; r <= 21; ++r) {
        for (std::uint64_t r2 = 1; r2 <= 21; ++r2) {
            auto req = base;
            req.commitment_a = grp->pow(grp->g1(), sc(r));
            req.commitment_b = grp->pow(grp->g2(), sc(r2));
            for (const auto& kp : keys) {
                auto v = verify_share(*grp, derive_share(*grp, req, kp), kp.pk, req);
                CHECK(v == (r == r2 ? ShareVerdict::Valid : ShareVerdict::DishonestClient));
            }
        }
    }
}

TEST_CASE("reconstruct_key") {
    WorkedExample ex;
    std::vector<SecretShare> a{ex.share(1), ex.share(2), ex.share(3)};
    CHECK(reconstruct_key(*ex.grp, ex.req, a, ex.pks) == sc(22));
    std::vector<SecretShare> b{ex.share(4), ex.share(2), ex.share(3)};
    CHECK(reconstruct_key(*ex.grp, ex.req, b, ex.pks) == sc(22));
    // Oracle for the second subset: unmask by hand, interpolate at 0.
    CHECK(oracle::lagrange_at({{2, 9}, {3, 17 ^ 24}, {4, 4 ^ 17}}, 0, 23) == 22);
    std::vector<SecretShare> all{ex.share(1), ex.share(2), ex.share(3), ex.share(4)};
    CHECK(open_request(*ex.grp, ex.req, all, ex.pks) == ex.message);

    std::vector<SecretShare> two{ex.share(1), ex.share(2)};
    CHECK(error_of([&] { reconstruct_key(*ex.grp, ex.req, two, ex.pks); }) == Errc::NotEnoughShares);
    std::vector<SecretShare> dup{ex.share(1), ex.share(1), ex.share(2)};
    CHECK(error_of([&] { reconstruct_key(*ex.grp, ex.req, dup, ex.pks); }) == Errc::DuplicateX);
    auto forged = ex.share(2);
    forged.value = ex.grp->deserialize_g1(Bytes{10});
    std::vector<SecretShare> bad{ex.share(1), forged, ex.share(3)};
    CHECK(error_of([&] { reconstruct_key(*ex.grp, ex.req, bad, ex.pks); }) == Errc::InvalidShareIncluded);
    std::vector<G1Element> short_pks(ex.pks.begin(), ex.pks.begin() + 3);
    CHECK(error_of([&] { reconstruct_key(*ex.grp, ex.req, a, short_pks); }) == Errc::InvalidArgument);
}

TEST_CASE("reconstruct_key never accepts index 0") {
    WorkedExample ex;
    // A share claiming to be the secret's own abscissa.
    SecretShare zero{0, ex.grp->deserialize_g1(Bytes{22})};
    std::vector<SecretShare> shares{zero, ex.share(1), ex.share(2)};
    CHECK(error_of([&] { reconstruct_key(*ex.grp, ex.req, shares, ex.pks); }) == Errc::IndexOutOfRange);
    CHECK(error_of([&] { share_point(*ex.grp, ex.req, zero); }) == Errc::IndexOutOfRange);
    for (std::uint32_t i = 1; i <= 4; ++i) CHECK(share_point(*ex.grp, ex.req, ex.share(i)).x == sc(i));
}

TEST_CASE("end-to-end over every threshold", "[property]") {
    auto grp = make_group(ToyConfig{1000003, 2, {}});
    std::mt19937_64 rng(2026);
    for (std::uint32_t n = 3; n <= 12; ++n) {
        std::vector<KeyPair> keys;
        std::vector<G1Element> pks;
        for (std::uint32_t i = 1; i <= n; ++i) {
            keys.push_back(keygen(*grp, 1000 * n + i, i));
            pks.push_back(keys.back().pk);
        }
        for (std::uint32_t t = (n + 1) / 2 + 1; t <= n; ++t) {
            HashDrbg drbg(n * 100 + t, "test/e2e");
            auto k = grp->share_field().random_nonzero(drbg);
            Bytes m(rng() % 64);
            for (auto& b : m) b = static_cast<std::uint8_t>(rng());
            auto req = build_request(*grp, k, grp->exponents().random_nonzero(drbg), m, 0, pks, t);
            CHECK(req.masks.size() == n - t + 1);
            std::vector<SecretShare> shares;
            for (auto& kp : keys) {
                shares.push_back(derive_share(*grp, req, kp));
                CHECK(verify_share(*grp, shares.back(), kp.pk, req) == ShareVerdict::Valid);
            }
            auto check_subset = [&](const std::vector<std::uint64_t>& idx) {
                std::vector<SecretShare> sub;
                for (auto i : idx) sub.push_back(shares[i - 1]);
                CHECK(reconstruct_key(*grp, req, sub, pks) == k);
                CHECK(open_request(*grp, req, sub, pks) == m);
            };
            if (n <= 8) {
                oracle::for_each_subset(n, t, check_subset);
            } else {
                for (int s = 0; s < 50; ++s) {
                    std::vector<std::uint64_t> idx(n);
                    for (std::uint32_t i = 0; i < n; ++i) idx[i] = i + 1;
                    std::shuffle(idx.begin(), idx.end(), rng);
                    idx.resize(t);
                    check_subset(idx);
                }
            }
        }
    }
}

TEST_CASE("end-to-end on BLS12-381") {
    auto grp = make_group(CurveConfig{});
    std::vector<KeyPair> keys;
    std::vector<G1Element> pks;
    for (std::uint32_t i = 1; i <= 5; ++i) {
        keys.push_back(keygen(*grp, 500 + i, i));
        pks.push_back(keys.back().pk);
    }
    HashDrbg drbg(8, "test/curve-e2e");
    auto k = grp->share_field().random_nonzero(drbg);
    auto req = build_request(*grp, k, grp->exponents().random_nonzero(drbg), text("curve message"), 42, pks, 3);
    CHECK_NOTHROW(validate_request(*grp, req));
    std::vector<SecretShare> shares;
    for (auto& kp : keys) {
        shares.push_back(derive_share(*grp, req, kp));
        CHECK(verify_share(*grp, shares.back(), kp.pk, req) == ShareVerdict::Valid);
    }
    oracle::for_each_subset(5, 3, [&](const std::vector<std::uint64_t>& idx) {
        std::vector<SecretShare> sub;
        for (auto i : idx) sub.push_back(shares[i - 1]);
        CHECK(reconstruct_key(*grp, req, sub, pks) == k);
    });
    CHECK(open_request(*grp, req, shares, pks) == text("curve message"));
}

TEST_CASE("t-1 shares leave every key possible (field level)", "[property]") {
    auto res = oracle::secrecy_brute_force(23, 4, 3);
    CHECK(res.all_consistent);
    CHECK(res.views_checked == 6 * 23 * 23);
    CHECK(res.keys_checked == res.views_checked * 23);
}

TEST_CASE("the brute-force secrecy check can fail") {
    // A coalition of t observes enough points to pin the key.
    CHECK_FALSE(oracle::secrecy_brute_force(7, 4, 3, 3).all_consistent);
    CHECK(oracle::secrecy_brute_force(7, 4, 3, 2).all_consistent);
}

TEST_CASE("codec round trips") {
    WorkedExample ex;
    auto req2 = request_from_json(*ex.grp, Json::parse(canonical(to_json(ex.req))));
    CHECK(req2 == ex.req);
    auto share = ex.share(2);
    CHECK(share_from_json(*ex.grp, Json::parse(canonical(to_json(share)))) == share);
    auto kp = keypair_from_json(*ex.grp, to_json(*ex.grp, ex.keys[1], true));
    CHECK(kp.sk == ex.keys[1].sk);
    CHECK(kp.pk == ex.keys[1].pk);
    CHECK(kp.index == 2);

    auto cfg = group_config_from_json(to_json(ex.grp->config()));
    CHECK(make_group(cfg)->params().group_order == 22);
    auto curve_cfg = group_config_from_json(to_json(group::GroupConfig{CurveConfig{}}));
    CHECK(make_group(curve_cfg)->backend() == group::BackendId::curve);

    auto j = to_json(ex.req);
    j["masks"][0]["alpha"] = "zz";
    CHECK(error_of([&] { request_from_json(*ex.grp, j); }) == Errc::MalformedEncoding);
    j = to_json(ex.req);
    j.erase("threshold");
    CHECK(error_of([&] { request_from_json(*ex.grp, j); }) == Errc::MalformedEncoding);
    auto kj = to_json(*ex.grp, ex.keys[1], true);
    kj["pk"] = to_hex(ex.keys[0].pk.bytes());
    CHECK(error_of([&] { keypair_from_json(*ex.grp, kj); }) == Errc::MalformedEncoding);
}
