// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chaindns/errc.hpp"
#include "chaindns/state.hpp"
#include "chaindns/types.hpp"

// Root-network asset discovery: a FIFO queue of pending registration
// requests with block-number expiry, the asset->providers and
// provider->assets dual maps, and the persistent re-verification cursor.
namespace chaindns::assetreg {

struct QueueEntry {
    std::uint64_t seq = 0;
    PendingRequest request;
};

// Appends a PendingRequest; validation is deferred to the off-chain worker.
Errc register_asset_for_domain(ChainState& state, const AccountId& origin,
                               const std::string& domain, const AssetHash& asset_hash,
                               std::uint64_t current_block, std::uint64_t queue_cap);

// Worker-privileged. Adds the domain to the asset's provider list (and the
// inverse entry) and removes the validated request from the queue.
Errc submit_verified_domain(ChainState& state, const std::string& domain,
                            const AssetHash& asset_hash, std::uint64_t seq_hint,
                            bool worker_origin);

// Worker-privileged. Drops one pending request that failed validation.
Errc discard_request(ChainState& state, std::uint64_t seq, bool worker_origin);

// Block-initialization hook: removes every request with
// current_block > timestamp + lifetime. Returns the number pruned.
std::uint64_t prune_expired_requests(ChainState& state, std::uint64_t current_block,
                                     std::uint64_t lifetime);

std::vector<std::string> query_asset_providers(const ChainState& state,
                                               const AssetHash& asset_hash);
std::vector<AssetHash> provider_assets(const ChainState& state, const std::string& domain);

// Worker-privileged. Removes the domain from every asset list it appears in
// and deletes its inverse entry. Returns the number of asset entries touched.
Errc remove_provider(ChainState& state, const std::string& domain, bool worker_origin,
                     std::uint64_t* assets_touched = nullptr);

// Next `batch_size` providers in lexicographic order starting at the stored
// cursor; advances and wraps the cursor.
std::vector<std::string> advance_cursor(ChainState& state, std::uint64_t batch_size);

// Read-only version of advance_cursor for off-chain workers: the batch that
// an advance of `batch_size` would return, without touching state.
std::vector<std::string> peek_cursor_batch(const ChainState& state, std::uint64_t batch_size);

std::uint64_t cursor_position(const ChainState& state);
std::vector<std::string> provider_list(const ChainState& state);  // lexicographic

std::uint64_t pending_count(const ChainState& state);
// Oldest-first live queue entries, at most `limit` (0 = all).
std::vector<QueueEntry> pending_requests(const ChainState& state, std::uint64_t limit = 0);

// Brute-force reconstructions for the dual-map equivalence check.
std::map<std::string, std::vector<AssetHash>> rebuild_provider_assets(const ChainState& state);
std::map<AssetHash, std::vector<std::string>> stored_asset_providers(const ChainState& state);

}  // namespace chaindns::assetreg
