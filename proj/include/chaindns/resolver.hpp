// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <functional>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chaindns/netsim/rpc.hpp"
#include "chaindns/result.hpp"
#include "chaindns/transaction.hpp"
#include "chaindns/types.hpp"

namespace chaindns::resolver {

using netsim::RpcTransport;

struct ResolverConfig {
    ChainSpec root_spec;  // static and well-known
    std::size_t cache_capacity = 128;  // 0 disables caching
    std::uint64_t cache_ttl_ms = 60'000;
};

// Millisecond clock used for cache aging; defaults to a monotonic clock,
// tests and the simulator supply a logical one.
using ClockFn = std::function<std::uint64_t()>;

// TTL + LRU cache of resolved domain specs. Shared by concurrent resolve
// calls; all operations are atomic with respect to each other.
class SpecCache {
public:
    SpecCache(std::size_t capacity, std::uint64_t ttl_ms);

    std::optional<ChainSpec> get(const std::string& domain, std::uint64_t now_ms);
    void put(const std::string& domain, const ChainSpec& spec, std::uint64_t now_ms);
    void clear();
    std::size_t size() const;

private:
    struct Entry {
        std::string domain;
        ChainSpec spec;
        std::uint64_t inserted_at_ms = 0;
    };

    std::size_t capacity_;
    std::uint64_t ttl_ms_;
    mutable std::mutex mu_;
    std::list<Entry> lru_;  // front = most recently used
    std::unordered_map<std::string, std::list<Entry>::iterator> index_;
};

// Client side of the hierarchical resolution protocol: root network to TLD
// network to domain record, plus domain claiming and asset lookup.
class Resolver {
public:
    Resolver(ResolverConfig cfg, std::shared_ptr<RpcTransport> transport, ClockFn clock = {});

    // Resolution: cache hit, otherwise query the root for the TLD network's
    // spec, then that network for the domain record.
    // Errors: InvalidDomain, TldNotFound, DomainNotFound, DomainRevoked,
    // TransportError.
    Result<ChainSpec> resolve(const std::string& domain);

    // Domain claiming: resolves the TLD network via the root, pre-checks
    // availability, then submits register_domain to the TLD network. The
    // registration takes effect when the TLD network seals its next block.
    Result<void> claim_domain(const std::string& domain, const ChainSpec& spec,
                              const std::vector<NodeId>& maintainers, const AccountId& origin,
                              std::uint64_t fee = 1);

    struct AssetResolution {
        std::vector<std::pair<std::string, ChainSpec>> providers;
        std::vector<std::string> warnings;  // providers omitted, with cause
    };
    // Asset lookup: hashes the identifier client-side, fetches the provider
    // list from the root, and resolves each provider. Providers that fail to
    // resolve are omitted with a warning.
    Result<AssetResolution> resolve_asset(const std::string& asset_id);

    // Submits one register_asset_for_domain per identifier. Hashing happens
    // here, so raw identifiers never appear in transaction data.
    Result<void> register_assets(const std::string& domain,
                                 const std::vector<std::string>& asset_ids,
                                 const AccountId& origin, std::uint64_t fee = 1);

    std::size_t cache_size() const { return cache_.size(); }
    void flush_cache() { cache_.clear(); }

private:
    Result<ChainSpec> fetch_tld_spec(const std::string& tld);
    Result<netsim::Json> call(const ChainSpec& target, const std::string& method,
                              netsim::Json params);
    Result<void> submit_tx(const ChainSpec& target, const AccountId& origin, Call call,
                           std::uint64_t fee);

    ResolverConfig cfg_;
    std::shared_ptr<RpcTransport> transport_;
    ClockFn clock_;
    SpecCache cache_;
    // local next-nonce tracking per (network payload, origin)
    std::mutex nonce_mu_;
    std::unordered_map<std::string, std::uint64_t> next_nonce_;
};

}  // namespace chaindns::resolver
