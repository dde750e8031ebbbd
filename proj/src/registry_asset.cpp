// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/registry/asset.hpp"

#include <algorithm>

#include "chaindns/codec.hpp"
#include "chaindns/hash.hpp"
#include "chaindns/transaction.hpp"

namespace chaindns::assetreg {

namespace {

const Bytes kHeadKey = to_bytes("q/head");
const Bytes kTailKey = to_bytes("q/tail");
const Bytes kLiveKey = to_bytes("q/live");
const Bytes kItemPrefix = to_bytes("q/item/");
const Bytes kAssetPrefix = to_bytes("ap/");
const Bytes kProviderPrefix = to_bytes("pa/");
const Bytes kCursorKey = to_bytes("cursor");

Bytes item_key(std::uint64_t seq) {
    Bytes key = kItemPrefix;
    // big-endian so key order equals queue order
    for (int i = 7; i >= 0; --i) key.push_back(static_cast<std::uint8_t>(seq >> (8 * i)));
    return key;
}

Bytes asset_key(const AssetHash& hash) {
    Bytes key = kAssetPrefix;
    key.insert(key.end(), hash.bytes.begin(), hash.bytes.end());
    return key;
}

Bytes provider_key(const std::string& domain) {
    Bytes key = kProviderPrefix;
    key.insert(key.end(), domain.begin(), domain.end());
    return key;
}

std::vector<std::string> decode_domain_list(const Bytes& raw) {
    codec::Reader r(raw);
    std::uint32_t n = r.u32le();
    std::vector<std::string> out;
    for (std::uint32_t i = 0; i < n && !r.failed(); ++i) out.push_back(r.str());
    if (!r.complete()) return {};
    return out;
}

Bytes encode_domain_list(const std::vector<std::string>& domains) {
    codec::Writer w;
    w.u32le(static_cast<std::uint32_t>(domains.size()));
    for (const auto& d : domains) w.str(d);
    return std::move(w).take();
}

std::vector<AssetHash> decode_hash_list(const Bytes& raw) {
    codec::Reader r(raw);
    std::uint32_t n = r.u32le();
    std::vector<AssetHash> out;
    for (std::uint32_t i = 0; i < n && !r.failed(); ++i) out.push_back(r.id<AssetHashTag>());
    if (!r.complete()) return {};
    return out;
}

Bytes encode_hash_list(const std::vector<AssetHash>& hashes) {
    codec::Writer w;
    w.u32le(static_cast<std::uint32_t>(hashes.size()));
    for (const auto& h : hashes) w.id(h);
    return std::move(w).take();
}

std::uint64_t get_or_zero(const ChainState& state, const Bytes& key) {
    return state.get_u64(key).value_or(0);
}

}  // namespace

Errc register_asset_for_domain(ChainState& state, const AccountId& origin,
                               const std::string& domain, const AssetHash& asset_hash,
                               std::uint64_t current_block, std::uint64_t queue_cap) {
    std::uint64_t live = get_or_zero(state, kLiveKey);
    if (live >= queue_cap) return Errc::QueueFull;

    std::uint64_t tail = get_or_zero(state, kTailKey);
    PendingRequest req{origin, domain, asset_hash, current_block};
    codec::Writer w;
    codec::write_pending_request(w, req);
    state.put(item_key(tail), std::move(w).take());
    state.put_u64(kTailKey, tail + 1);
    state.put_u64(kLiveKey, live + 1);
    return Errc::Ok;
}

Errc submit_verified_domain(ChainState& state, const std::string& domain,
                            const AssetHash& asset_hash, std::uint64_t seq_hint,
                            bool worker_origin) {
    if (!worker_origin) return Errc::NotAuthorized;

    Bytes akey = asset_key(asset_hash);
    std::vector<std::string> providers;
    if (const Bytes* raw = state.get(akey)) providers = decode_domain_list(*raw);
    if (std::find(providers.begin(), providers.end(), domain) != providers.end()) {
        return Errc::DuplicateProvider;
    }

    providers.push_back(domain);
    state.put(std::move(akey), encode_domain_list(providers));

    Bytes pkey = provider_key(domain);
    std::vector<AssetHash> assets;
    if (const Bytes* raw = state.get(pkey)) assets = decode_hash_list(*raw);
    if (std::find(assets.begin(), assets.end(), asset_hash) == assets.end()) {
        assets.push_back(asset_hash);
        state.put(std::move(pkey), encode_hash_list(assets));
    }

    // consume the validated request: the hinted entry, or the oldest match
    std::uint64_t head = get_or_zero(state, kHeadKey);
    std::uint64_t tail = get_or_zero(state, kTailKey);
    auto consume = [&](std::uint64_t seq) {
        if (!state.erase(item_key(seq))) return false;
        state.put_u64(kLiveKey, get_or_zero(state, kLiveKey) - 1);
        return true;
    };
    if (seq_hint != call::kNoSeqHint) {
        consume(seq_hint);
    } else {
        for (std::uint64_t seq = head; seq < tail; ++seq) {
            const Bytes* raw = state.get(item_key(seq));
            if (!raw) continue;
            codec::Reader r(*raw);
            PendingRequest req = codec::read_pending_request(r);
            if (r.complete() && req.domain == domain && req.asset_hash == asset_hash) {
                consume(seq);
                break;
            }
        }
    }
    return Errc::Ok;
}

Errc discard_request(ChainState& state, std::uint64_t seq, bool worker_origin) {
    if (!worker_origin) return Errc::NotAuthorized;
    if (!state.erase(item_key(seq))) return Errc::NotFound;
    state.put_u64(kLiveKey, get_or_zero(state, kLiveKey) - 1);
    return Errc::Ok;
}

std::uint64_t prune_expired_requests(ChainState& state, std::uint64_t current_block,
                                     std::uint64_t lifetime) {
    std::uint64_t head = get_or_zero(state, kHeadKey);
    std::uint64_t tail = get_or_zero(state, kTailKey);
    std::uint64_t pruned = 0;
    // timestamps are non-decreasing in queue order, so expired entries form
    // a prefix; stop at the first live entry that has not expired
    while (head < tail) {
        Bytes key = item_key(head);
        const Bytes* raw = state.get(key);
        if (!raw) {
            ++head;
            continue;
        }
        codec::Reader r(*raw);
        PendingRequest req = codec::read_pending_request(r);
        if (!r.complete() || current_block > req.timestamp + lifetime) {
            state.erase(key);
            state.put_u64(kLiveKey, get_or_zero(state, kLiveKey) - 1);
            ++pruned;
            ++head;
            continue;
        }
        break;
    }
    if (head != get_or_zero(state, kHeadKey)) state.put_u64(kHeadKey, head);
    return pruned;
}

std::vector<std::string> query_asset_providers(const ChainState& state,
                                               const AssetHash& asset_hash) {
    const Bytes* raw = state.get(asset_key(asset_hash));
    if (!raw) return {};
    return decode_domain_list(*raw);
}

std::vector<AssetHash> provider_assets(const ChainState& state, const std::string& domain) {
    const Bytes* raw = state.get(provider_key(domain));
    if (!raw) return {};
    return decode_hash_list(*raw);
}

Errc remove_provider(ChainState& state, const std::string& domain, bool worker_origin,
                     std::uint64_t* assets_touched) {
    if (!worker_origin) return Errc::NotAuthorized;
    Bytes pkey = provider_key(domain);
    const Bytes* raw = state.get(pkey);
    if (!raw) return Errc::UnknownProvider;

    std::uint64_t touched = 0;
    for (const auto& hash : decode_hash_list(*raw)) {
        Bytes akey = asset_key(hash);
        const Bytes* araw = state.get(akey);
        if (!araw) continue;
        auto providers = decode_domain_list(*araw);
        auto it = std::remove(providers.begin(), providers.end(), domain);
        if (it == providers.end()) continue;
        providers.erase(it, providers.end());
        ++touched;
        if (providers.empty()) {
            state.erase(akey);
        } else {
            state.put(std::move(akey), encode_domain_list(providers));
        }
    }
    state.erase(pkey);

    // keep the cursor inside the shrunken provider list
    std::uint64_t count = provider_list(state).size();
    std::uint64_t cursor = get_or_zero(state, kCursorKey);
    if (cursor > count) state.put_u64(kCursorKey, 0);

    if (assets_touched) *assets_touched = touched;
    return Errc::Ok;
}

std::vector<std::string> provider_list(const ChainState& state) {
    std::vector<std::string> out;
    state.for_each_prefix(kProviderPrefix, [&](const Bytes& key, const Bytes&) {
        out.emplace_back(key.begin() + kProviderPrefix.size(), key.end());
    });
    return out;  // map iteration order == lexicographic
}

std::uint64_t cursor_position(const ChainState& state) { return get_or_zero(state, kCursorKey); }

namespace {
std::vector<std::string> cursor_batch(const ChainState& state, std::uint64_t batch_size,
                                      std::uint64_t* new_cursor) {
    auto providers = provider_list(state);
    std::uint64_t n = providers.size();
    if (n == 0 || batch_size == 0) {
        if (new_cursor) *new_cursor = 0;
        return {};
    }
    std::uint64_t start = get_or_zero(state, kCursorKey) % n;
    std::uint64_t consumed = std::min<std::uint64_t>(batch_size, n);
    std::vector<std::string> out;
    out.reserve(consumed);
    for (std::uint64_t i = 0; i < consumed; ++i) {
        out.push_back(providers[(start + i) % n]);
    }
    if (new_cursor) *new_cursor = (start + consumed) % n;
    return out;
}
}  // namespace

std::vector<std::string> advance_cursor(ChainState& state, std::uint64_t batch_size) {
    std::uint64_t new_cursor = 0;
    auto batch = cursor_batch(state, batch_size, &new_cursor);
    if (new_cursor != get_or_zero(state, kCursorKey)) state.put_u64(kCursorKey, new_cursor);
    return batch;
}

std::vector<std::string> peek_cursor_batch(const ChainState& state, std::uint64_t batch_size) {
    return cursor_batch(state, batch_size, nullptr);
}

std::uint64_t pending_count(const ChainState& state) { return get_or_zero(state, kLiveKey); }

std::vector<QueueEntry> pending_requests(const ChainState& state, std::uint64_t limit) {
    std::vector<QueueEntry> out;
    std::uint64_t head = get_or_zero(state, kHeadKey);
    std::uint64_t tail = get_or_zero(state, kTailKey);
    for (std::uint64_t seq = head; seq < tail; ++seq) {
        if (limit != 0 && out.size() >= limit) break;
        const Bytes* raw = state.get(item_key(seq));
        if (!raw) continue;
        codec::Reader r(*raw);
        PendingRequest req = codec::read_pending_request(r);
        if (r.complete()) out.push_back(QueueEntry{seq, std::move(req)});
    }
    return out;
}

std::map<std::string, std::vector<AssetHash>> rebuild_provider_assets(const ChainState& state) {
    // reconstruct the inverse map from the asset->providers side alone
    std::map<std::string, std::vector<AssetHash>> out;
    state.for_each_prefix(kAssetPrefix, [&](const Bytes& key, const Bytes& value) {
        if (key.size() != kAssetPrefix.size() + 32) return;
        AssetHash hash;
        std::copy(key.begin() + kAssetPrefix.size(), key.end(), hash.bytes.begin());
        for (const auto& domain : decode_domain_list(value)) {
            out[domain].push_back(hash);
        }
    });
    return out;
}

std::map<AssetHash, std::vector<std::string>> stored_asset_providers(const ChainState& state) {
    std::map<AssetHash, std::vector<std::string>> out;
    state.for_each_prefix(kAssetPrefix, [&](const Bytes& key, const Bytes& value) {
        if (key.size() != kAssetPrefix.size() + 32) return;
        AssetHash hash;
        std::copy(key.begin() + kAssetPrefix.size(), key.end(), hash.bytes.begin());
        out[hash] = decode_domain_list(value);
    });
    return out;
}

}  // namespace chaindns::assetreg
