// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/common/drbg.hpp"

namespace trc {

HashDrbg::HashDrbg(std::uint64_t seed, std::string_view label) {
    prefix_.assign(label.begin(), label.end());
    prefix_.push_back(0);
    append_be64(prefix_, seed);
}

void HashDrbg::refill() {
    Bytes input = prefix_;
    append_be64(input, counter_++);
    block_ = sha256(input);
    used_ = 0;
}

Bytes HashDrbg::next_bytes(std::size_t n) {
    Bytes out;
    out.reserve(n);
    while (out.size() < n) {
        if (used_ == block_.size()) refill();
        out.push_back(block_[used_++]);
    }
    return out;
}

std::uint64_t HashDrbg::next_u64() {
    std::uint64_t v = 0;
    for (auto b : next_bytes(8)) v = (v << 8) | b;
    return v;
}

}  // namespace trc
