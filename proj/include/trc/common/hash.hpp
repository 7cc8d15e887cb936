// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <memory>

#include "trc/common/bytes.hpp"

namespace trc {

using Digest256 = std::array<std::uint8_t, 32>;
using Digest512 = std::array<std::uint8_t, 64>;

Digest256 sha256(ByteView data);
Digest512 sha512(ByteView data);
Digest256 hmac_sha256(ByteView key, ByteView data);

bool constant_time_equal(ByteView a, ByteView b);

/// Incremental SHA-256 for multi-part input (domain tag, then fields).
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(Sha256&&) noexcept;
    Sha256& operator=(Sha256&&) noexcept;

    Sha256& update(ByteView data);
    Sha256& update(std::string_view text) { return update(as_bytes(text)); }
    Digest256 finish();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace trc
