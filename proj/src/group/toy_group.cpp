// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/group/toy_group.hpp"

#include <limits>

#include "trc/common/errors.hpp"
#include "trc/common/hash.hpp"

namespace trc::group {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin base set for 64-bit integers.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p) {
    std::uint64_t order = p - 1;
    std::uint64_t rest = order;
    std::vector<std::uint64_t> factors;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
        if (rest % f == 0) {
            factors.push_back(f);
            while (rest % f == 0) rest /= f;
        }
    }
    if (rest > 1) factors.push_back(rest);
    for (auto f : factors) {
        while (order % f == 0 && powmod(g, order / f, p) == 1) order /= f;
    }
    return order;
}

namespace {

std::size_t width_for(std::uint64_t max_value) {
    std::size_t w = 1;
    while (w < 8 && (max_value >> (8 * w)) != 0) ++w;
    return w;
}

ToyConfig validated(const ToyConfig& c) {
    if (c.p < 3 || c.p >= (std::uint64_t{1} << 62) || !is_prime_u64(c.p))
        fail(Errc::InvalidArgument, "toy modulus " + std::to_string(c.p) + " is not an odd prime below 2^62");
    if (c.g == 0 || c.g >= c.p) fail(Errc::NonGenerator, "generator must lie in [1, p)");
    std::uint64_t declared = c.order.value_or(c.p - 1);
    std::uint64_t actual = multiplicative_order(c.g, c.p);
    if (actual != declared)
        fail(Errc::NonGenerator, "g=" + std::to_string(c.g) + " has order " + std::to_string(actual) +
                                     ", declared " + std::to_string(declared));
    if (actual < 2) fail(Errc::NonGenerator, "generator of the trivial group");
    return ToyConfig{c.p, c.g, actual};
}

GroupParams toy_params(const ToyConfig& c) {
    std::size_t w = width_for(c.p - 1);
    Bytes g = big_to_bytes(BigUint(c.g), w);
    return GroupParams{BackendId::toy, std::to_string(c.p), BigUint(*c.order), G1Element(g), G2Element(g)};
}

}  // namespace

ToyGroup::ToyGroup(const ToyConfig& config) : ToyGroup(validated(config), Validated{}) {}

ToyGroup::ToyGroup(const ToyConfig& config, Validated)
    : Group(toy_params(config), ModRing(BigUint(*config.order)), ModRing(BigUint(config.p))),
      p_(config.p),
      g_(config.g),
      q_(*config.order),
      elem_width_(width_for(config.p - 1)),
      gt_width_(width_for(q_ - 1)) {
    if (p_ <= kMaxPairingModulus) {
        dlog_table_.assign(p_, std::numeric_limits<std::uint32_t>::max());
        std::uint64_t x = 1;
        for (std::uint64_t e = 0; e < q_; ++e) {
            dlog_table_[x] = static_cast<std::uint32_t>(e);
            x = mulmod(x, g_, p_);
        }
    }
}

GroupConfig ToyGroup::config() const { return ToyConfig{p_, g_, q_}; }

Bytes ToyGroup::encode(std::uint64_t v) const { return big_to_bytes(BigUint(v), elem_width_); }

std::uint64_t ToyGroup::value(const Bytes& encoding) const {
    std::uint64_t v = 0;
    for (auto b : encoding) v = (v << 8) | b;
    return v;
}

std::uint64_t ToyGroup::checked_value(ByteView bytes) const {
    if (bytes.size() != elem_width_) fail(Errc::MalformedEncoding, "toy element has wrong width");
    std::uint64_t v = 0;
    for (auto b : bytes) v = (v << 8) | b;
    if (v == 0 || v >= p_) fail(Errc::MalformedEncoding, "toy element out of range");
    if (q_ != p_ - 1 && powmod(v, q_, p_) != 1) fail(Errc::MalformedEncoding, "toy element outside the subgroup");
    return v;
}

std::uint64_t ToyGroup::dlog(std::uint64_t element) const {
    if (dlog_table_.empty())
        fail(Errc::ToyGroupTooLarge, "modulus " + std::to_string(p_) + " exceeds the exhaustive discrete-log bound");
    return dlog_table_.at(element);
}

G1Element ToyGroup::identity_g1() const { return G1Element(encode(1)); }
G2Element ToyGroup::identity_g2() const { return G2Element(encode(1)); }
GtElement ToyGroup::identity_gt() const { return GtElement(big_to_bytes(0, gt_width_)); }

G1Element ToyGroup::pow(const G1Element& base, const Scalar& exp) const {
    auto e = static_cast<std::uint64_t>(exp.value() % q_);
    return G1Element(encode(powmod(value(base.bytes()), e, p_)));
}

G2Element ToyGroup::pow(const G2Element& base, const Scalar& exp) const {
    auto e = static_cast<std::uint64_t>(exp.value() % q_);
    return G2Element(encode(powmod(value(base.bytes()), e, p_)));
}

G1Element ToyGroup::mul(const G1Element& a, const G1Element& b) const {
    return G1Element(encode(mulmod(value(a.bytes()), value(b.bytes()), p_)));
}

G2Element ToyGroup::mul(const G2Element& a, const G2Element& b) const {
    return G2Element(encode(mulmod(value(a.bytes()), value(b.bytes()), p_)));
}

GtElement ToyGroup::pairing(const G1Element& p, const G2Element& q) const {
    std::uint64_t a = dlog(value(p.bytes()));
    std::uint64_t b = dlog(value(q.bytes()));
    return GtElement(big_to_bytes(BigUint(mulmod(a, b, q_)), gt_width_));
}

G1Element ToyGroup::deserialize_g1(ByteView bytes) const { return G1Element(encode(checked_value(bytes))); }

G2Element ToyGroup::deserialize_g2(ByteView bytes) const { return G2Element(encode(checked_value(bytes))); }

GtElement ToyGroup::deserialize_gt(ByteView bytes) const {
    if (bytes.size() != gt_width_) fail(Errc::MalformedEncoding, "toy GT element has wrong width");
    BigUint v = bytes_to_big(bytes);
    if (v >= q_) fail(Errc::MalformedEncoding, "toy GT element out of range");
    return GtElement(Bytes(bytes.begin(), bytes.end()));
}

G2Element ToyGroup::hash_to_g2(ByteView message, std::string_view domain) const {
    Bytes input(domain.begin(), domain.end());
    input.push_back(0);
    input.insert(input.end(), message.begin(), message.end());
    auto digest = sha512(input);
    // Exponent in [1, q) so the point is never the identity.
    auto e = static_cast<std::uint64_t>(bytes_to_big(digest) % (q_ - 1)) + 1;
    return G2Element(encode(powmod(g_, e, p_)));
}

Scalar ToyGroup::share_to_scalar(const G1Element& share) const {
    return share_field().from_u64(value(share.bytes()));
}

}  // namespace trc::group
