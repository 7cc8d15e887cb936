// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "trc/common/bytes.hpp"
#include "trc/group/scalar.hpp"

namespace trc::core {

// Ciphertext = (m XOR keystream) || tag. The keystream is SHA-256 in counter
// mode over a key derived from the fixed-width encoding of k in `field`; the
// tag is HMAC-SHA-256 under a second derived key.
inline constexpr std::size_t kCipherTagSize = 32;

Bytes encrypt_message(const group::ModRing& field, const group::Scalar& k, ByteView message);

// Throws AuthenticationFailed if the tag does not verify or c is too short.
Bytes decrypt_message(const group::ModRing& field, const group::Scalar& k, ByteView ciphertext);

}  // namespace trc::core
