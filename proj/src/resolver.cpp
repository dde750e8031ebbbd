// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/resolver.hpp"

#include <chrono>

#include "chaindns/chain.hpp"
#include "chaindns/hash.hpp"
#include "chaindns/transaction.hpp"

namespace chaindns::resolver {

using netsim::Json;

SpecCache::SpecCache(std::size_t capacity, std::uint64_t ttl_ms)
    : capacity_(capacity), ttl_ms_(ttl_ms) {}

std::optional<ChainSpec> SpecCache::get(const std::string& domain, std::uint64_t now_ms) {
    if (capacity_ == 0) return std::nullopt;
    std::lock_guard lock(mu_);
    auto it = index_.find(domain);
    if (it == index_.end()) return std::nullopt;
    if (now_ms - it->second->inserted_at_ms > ttl_ms_) {
        lru_.erase(it->second);
        index_.erase(it);
        return std::nullopt;
    }
    lru_.splice(lru_.begin(), lru_, it->second);
    return lru_.front().spec;
}

void SpecCache::put(const std::string& domain, const ChainSpec& spec, std::uint64_t now_ms) {
    if (capacity_ == 0) return;
    std::lock_guard lock(mu_);
    auto it = index_.find(domain);
    if (it != index_.end()) {
        it->second->spec = spec;
        it->second->inserted_at_ms = now_ms;
        lru_.splice(lru_.begin(), lru_, it->second);
        return;
    }
    lru_.push_front(Entry{domain, spec, now_ms});
    index_[domain] = lru_.begin();
    while (lru_.size() > capacity_) {
        index_.erase(lru_.back().domain);
        lru_.pop_back();
    }
}

void SpecCache::clear() {
    std::lock_guard lock(mu_);
    lru_.clear();
    index_.clear();
}

std::size_t SpecCache::size() const {
    std::lock_guard lock(mu_);
    return lru_.size();
}

namespace {
std::uint64_t steady_now_ms() {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now().time_since_epoch())
                                          .count());
}
}  // namespace

Resolver::Resolver(ResolverConfig cfg, std::shared_ptr<RpcTransport> transport, ClockFn clock)
    : cfg_(std::move(cfg)),
      transport_(std::move(transport)),
      clock_(clock ? std::move(clock) : ClockFn(steady_now_ms)),
      cache_(cfg_.cache_capacity, cfg_.cache_ttl_ms) {}

Result<Json> Resolver::call(const ChainSpec& target, const std::string& method, Json params) {
    return transport_->call(target, method, std::move(params));
}

Result<ChainSpec> Resolver::fetch_tld_spec(const std::string& tld) {
    auto reply = call(cfg_.root_spec, "root_queryTld", Json::array({tld}));
    if (!reply.ok()) return Errc::TransportError;
    if (reply.value().is_null()) return Errc::TldNotFound;
    auto spec = netsim::chain_spec_from(reply.value());
    if (!spec) return Errc::TransportError;
    return std::move(*spec);
}

Result<ChainSpec> Resolver::resolve(const std::string& domain) {
    auto parsed = parse_domain(domain);
    if (!parsed) return Errc::InvalidDomain;

    if (auto cached = cache_.get(domain, clock_())) return std::move(*cached);

    auto tld_spec = fetch_tld_spec(parsed->tld);
    if (!tld_spec.ok()) return tld_spec.error();

    auto reply = call(tld_spec.value(), "tld_queryDomain", Json::array({domain}));
    if (!reply.ok()) return Errc::TransportError;
    if (reply.value().is_null()) return Errc::DomainNotFound;
    auto info = netsim::domain_info_from(reply.value());
    if (!info) return Errc::TransportError;
    if (info->available) return Errc::DomainRevoked;
    if (!info->chain_specifications) return Errc::TransportError;

    cache_.put(domain, *info->chain_specifications, clock_());
    return std::move(*info->chain_specifications);
}

Result<void> Resolver::submit_tx(const ChainSpec& target, const AccountId& origin, Call call_value,
                                 std::uint64_t fee) {
    // next nonce: the chain's expected nonce, bumped past any transaction we
    // already submitted and that is still waiting in the pool
    Bytes nonce_storage_key = to_bytes("nonce/");
    nonce_storage_key.insert(nonce_storage_key.end(), origin.bytes.begin(), origin.bytes.end());
    auto reply = call(target, "state_getStorage", Json::array({to_hex(nonce_storage_key)}));
    if (!reply.ok()) return Errc::TransportError;
    std::uint64_t chain_nonce = 0;
    if (reply.value().is_string()) {
        auto raw = from_hex(reply.value().get<std::string>());
        if (raw && raw->size() == 8) {
            chain_nonce = 0;
            for (int i = 7; i >= 0; --i) chain_nonce = chain_nonce << 8 | (*raw)[i];
        }
    }

    std::string tracker_key = to_string(target.payload) + "|" + origin.hex();
    std::uint64_t nonce;
    {
        std::lock_guard lock(nonce_mu_);
        auto it = next_nonce_.find(tracker_key);
        nonce = it == next_nonce_.end() ? chain_nonce : std::max(chain_nonce, it->second);
        next_nonce_[tracker_key] = nonce + 1;
    }

    Transaction tx{origin, nonce, std::move(call_value), fee};
    auto submitted =
        call(target, "author_submitExtrinsic", Json::array({to_hex(encode_transaction(tx))}));
    if (!submitted.ok()) return Errc::TransportError;
    return {};
}

Result<void> Resolver::claim_domain(const std::string& domain, const ChainSpec& spec,
                                    const std::vector<NodeId>& maintainers,
                                    const AccountId& origin, std::uint64_t fee) {
    auto parsed = parse_domain(domain);
    if (!parsed) return Errc::InvalidDomain;
    if (maintainers.empty()) return Errc::InsufficientMaintainers;

    auto tld_spec = fetch_tld_spec(parsed->tld);
    if (!tld_spec.ok()) return tld_spec.error();

    // pre-check so a taken domain surfaces before any fee is spent; the
    // chain still arbitrates races first-come first-served
    auto reply = call(tld_spec.value(), "tld_queryDomain", Json::array({domain}));
    if (!reply.ok()) return Errc::TransportError;
    if (!reply.value().is_null()) {
        auto info = netsim::domain_info_from(reply.value());
        if (!info) return Errc::TransportError;
        if (!info->available) return Errc::DomainTaken;
    }

    return submit_tx(tld_spec.value(), origin, call::RegisterDomain{domain, spec, maintainers},
                     fee);
}

Result<Resolver::AssetResolution> Resolver::resolve_asset(const std::string& asset_id) {
    AssetHash hash = asset_hash_of(asset_id);
    auto reply = call(cfg_.root_spec, "asset_queryProviders", Json::array({hash.hex()}));
    if (!reply.ok()) return Errc::TransportError;
    if (!reply.value().is_array()) return Errc::TransportError;

    AssetResolution out;
    for (const auto& entry : reply.value()) {
        if (!entry.is_string()) continue;
        std::string domain = entry.get<std::string>();
        auto spec = resolve(domain);
        if (spec.ok()) {
            out.providers.emplace_back(domain, std::move(spec).take());
        } else {
            out.warnings.push_back(domain + ": " + std::string(errc_name(spec.error())));
        }
    }
    return out;
}

Result<void> Resolver::register_assets(const std::string& domain,
                                       const std::vector<std::string>& asset_ids,
                                       const AccountId& origin, std::uint64_t fee) {
    for (const auto& id : asset_ids) {
        auto submitted = submit_tx(cfg_.root_spec, origin,
                                   call::RegisterAssetForDomain{domain, asset_hash_of(id)}, fee);
        if (!submitted.ok()) return submitted;
    }
    return {};
}

}  // namespace chaindns::resolver
