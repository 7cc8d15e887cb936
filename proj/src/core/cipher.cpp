// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/core/cipher.hpp"

#include "trc/common/errors.hpp"
#include "trc/common/hash.hpp"

namespace trc::core {

namespace {

struct DerivedKeys {
    Digest256 enc;
    Digest256 mac;
};

DerivedKeys derive(const group::ModRing& field, const group::Scalar& k) {
    Bytes key = field.encode(k);
    return {Sha256().update("trc/cipher/enc").update(key).finish(),
            Sha256().update("trc/cipher/mac").update(key).finish()};
}

void apply_keystream(const Digest256& key, Bytes& data) {
    Digest256 block{};
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i % block.size() == 0) {
            Bytes counter;
            append_be64(counter, i / block.size());
            block = Sha256().update(key).update(counter).finish();
        }
        data[i] ^= block[i % block.size()];
    }
}

}  // namespace

Bytes encrypt_message(const group::ModRing& field, const group::Scalar& k, ByteView message) {
    auto keys = derive(field, k);
    Bytes out(message.begin(), message.end());
    apply_keystream(keys.enc, out);
    auto tag = hmac_sha256(keys.mac, out);
    out.insert(out.end(), tag.begin(), tag.end());
    return out;
}

Bytes decrypt_message(const group::ModRing& field, const group::Scalar& k, ByteView ciphertext) {
    if (ciphertext.size() < kCipherTagSize) fail(Errc::AuthenticationFailed, "ciphertext shorter than its tag");
    auto keys = derive(field, k);
    auto body = ciphertext.first(ciphertext.size() - kCipherTagSize);
    auto tag = hmac_sha256(keys.mac, body);
    if (!constant_time_equal(tag, ciphertext.last(kCipherTagSize)))
        fail(Errc::AuthenticationFailed, "integrity tag mismatch");
    Bytes out(body.begin(), body.end());
    apply_keystream(keys.enc, out);
    return out;
}

}  // namespace trc::core
