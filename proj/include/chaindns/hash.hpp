// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "chaindns/bytes.hpp"
#include "chaindns/types.hpp"

namespace chaindns {

// BLAKE2b digests (unkeyed). 16-byte output for storage keys, 32-byte for
// everything else.
std::array<std::uint8_t, 16> digest128(const Bytes& data);
Hash32 digest256(const Bytes& data);

// Storage key for a name-keyed record: digest128(enc(s)) || enc(s).
// The hash randomizes key placement, the concatenated encoding keeps the
// key reversible.
Bytes storage_key_for(const std::string& s);

// Inverse of storage_key_for. Returns the name only if the layout parses
// and the digest re-verifies against the encoded payload.
std::optional<std::string> parse_storage_key(const Bytes& key);

// Asset identifiers are hashed client-side; only the digest goes on chain.
AssetHash asset_hash_of(const std::string& asset_id);

// Reserved origin for a node's off-chain worker. Worker-privileged calls
// must carry this account as their origin.
AccountId worker_account_for(const NodeId& node);

// Deterministic identifier derivation for simulated nodes and test accounts.
NodeId derive_node_id(std::uint64_t seed, const std::string& network_id, std::uint32_t index);
AccountId derive_account(const std::string& label);

}  // namespace chaindns
