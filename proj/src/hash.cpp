// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/hash.hpp"

#include <sodium.h>

#include <cstring>

#include "chaindns/codec.hpp"

namespace chaindns {

namespace {
void blake2b(std::uint8_t* out, std::size_t outlen, const std::uint8_t* in, std::size_t inlen) {
    crypto_generichash(out, outlen, in, inlen, nullptr, 0);
}
}  // namespace

std::array<std::uint8_t, 16> digest128(const Bytes& data) {
    std::array<std::uint8_t, 16> out{};
    blake2b(out.data(), out.size(), data.data(), data.size());
    return out;
}

Hash32 digest256(const Bytes& data) {
    Hash32 out;
    blake2b(out.bytes.data(), out.bytes.size(), data.data(), data.size());
    return out;
}

Bytes storage_key_for(const std::string& s) {
    Bytes encoded = codec::enc(s);
    auto digest = digest128(encoded);
    Bytes key(16 + encoded.size());
    std::memcpy(key.data(), digest.data(), 16);
    std::memcpy(key.data() + 16, encoded.data(), encoded.size());
    return key;
}

std::optional<std::string> parse_storage_key(const Bytes& key) {
    if (key.size() < 20) return std::nullopt;
    std::uint32_t len = static_cast<std::uint32_t>(key[16]) |
                        static_cast<std::uint32_t>(key[17]) << 8 |
                        static_cast<std::uint32_t>(key[18]) << 16 |
                        static_cast<std::uint32_t>(key[19]) << 24;
    if (key.size() != 20u + len) return std::nullopt;
    Bytes encoded(key.begin() + 16, key.end());
    auto digest = digest128(encoded);
    if (!std::equal(digest.begin(), digest.end(), key.begin())) return std::nullopt;
    return std::string(key.begin() + 20, key.end());
}

AssetHash asset_hash_of(const std::string& asset_id) {
    AssetHash out;
    blake2b(out.bytes.data(), out.bytes.size(),
            reinterpret_cast<const std::uint8_t*>(asset_id.data()), asset_id.size());
    return out;
}

AccountId worker_account_for(const NodeId& node) {
    Bytes data = to_bytes("chaindns/worker/");
    data.insert(data.end(), node.bytes.begin(), node.bytes.end());
    AccountId out;
    blake2b(out.bytes.data(), out.bytes.size(), data.data(), data.size());
    return out;
}

NodeId derive_node_id(std::uint64_t seed, const std::string& network_id, std::uint32_t index) {
    codec::Writer w;
    w.raw(to_bytes("chaindns/node/"));
    w.u64le(seed);
    w.str(network_id);
    w.u32le(index);
    NodeId out;
    const Bytes& data = w.bytes();
    blake2b(out.bytes.data(), out.bytes.size(), data.data(), data.size());
    return out;
}

AccountId derive_account(const std::string& label) {
    Bytes data = to_bytes("chaindns/account/" + label);
    AccountId out;
    blake2b(out.bytes.data(), out.bytes.size(), data.data(), data.size());
    return out;
}

}  // namespace chaindns
