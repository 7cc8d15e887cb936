// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string_view>

#include "trc/common/bytes.hpp"
#include "trc/common/hash.hpp"

namespace trc {

// Deterministic byte stream: block i = SHA-256(label || seed || i).
// Used wherever key material must be reproducible from a seed.
class HashDrbg {
public:
    HashDrbg(std::uint64_t seed, std::string_view label);

    Bytes next_bytes(std::size_t n);
    std::uint64_t next_u64();

private:
    void refill();

    Bytes prefix_;
    std::uint64_t counter_ = 0;
    Digest256 block_{};
    std::size_t used_ = block_.size();
};

// SplitMix64 finaliser; derives independent sub-seeds from (seed, index).
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace trc
