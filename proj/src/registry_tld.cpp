// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/registry/tld.hpp"

#include <set>

#include "chaindns/codec.hpp"
#include "chaindns/hash.hpp"

namespace chaindns::tldreg {

namespace {

const Bytes kMaintainerPrefix = to_bytes("mi/");

Bytes maintainer_key(const NodeId& node) {
    Bytes key = kMaintainerPrefix;
    key.insert(key.end(), node.bytes.begin(), node.bytes.end());
    return key;
}

std::optional<DomainInformation> load_domain(const ChainState& state, const std::string& domain) {
    const Bytes* raw = state.get(storage_key_for(domain));
    if (!raw) return std::nullopt;
    auto info = codec::decode_domain_info(*raw);
    if (!info.ok()) return std::nullopt;
    return std::move(info).take();
}

void store_domain(ChainState& state, const std::string& domain, const DomainInformation& info) {
    state.put(storage_key_for(domain), codec::encode_domain_info(info));
}

}  // namespace

Errc register_domain(ChainState& state, const AccountId& origin, const std::string& domain,
                     const ChainSpec& chain_spec, const std::vector<NodeId>& maintainers,
                     const std::string& network_tld, std::uint32_t min_maintainers) {
    auto parsed = parse_domain(domain);
    if (!parsed) return Errc::InvalidLabel;
    if (parsed->tld != network_tld) return Errc::WrongTld;
    if (maintainers.size() < min_maintainers) return Errc::InsufficientMaintainers;

    auto existing = load_domain(state, domain);
    if (existing && !existing->available) return Errc::DomainTaken;

    // every listed node must be unbound, and listed once
    std::set<NodeId> unique(maintainers.begin(), maintainers.end());
    if (unique.size() != maintainers.size()) return Errc::MaintainerConflict;
    for (const auto& node : maintainers) {
        if (state.get(maintainer_key(node))) return Errc::MaintainerConflict;
    }

    DomainInformation info;
    info.creator = origin;
    info.chain_specifications = chain_spec;
    info.maintainers = maintainers;
    info.available = false;
    store_domain(state, domain, info);
    for (const auto& node : maintainers) {
        state.put(maintainer_key(node), codec::enc(domain));
    }
    return Errc::Ok;
}

Errc revoke_domain(ChainState& state, const std::string& domain, bool worker_origin) {
    if (!worker_origin) return Errc::NotAuthorized;
    auto info = load_domain(state, domain);
    if (!info) return Errc::NotFound;
    if (info->available) return Errc::AlreadyAvailable;

    for (const auto& node : info->maintainers) {
        state.erase(maintainer_key(node));
    }
    info->available = true;
    info->chain_specifications.reset();
    info->maintainers.clear();
    store_domain(state, domain, *info);
    return Errc::Ok;
}

Errc amend_chainspec(ChainState& state, const AccountId& origin, const std::string& domain,
                     const ChainSpec& new_spec) {
    auto info = load_domain(state, domain);
    if (!info) return Errc::NotFound;
    if (info->available) return Errc::Unavailable;
    if (info->creator != origin) return Errc::NotOwner;

    info->chain_specifications = new_spec;
    store_domain(state, domain, *info);
    return Errc::Ok;
}

std::optional<DomainInformation> query_domain(const ChainState& state, const std::string& domain) {
    return load_domain(state, domain);
}

std::optional<std::string> maintainer_domain(const ChainState& state, const NodeId& node) {
    const Bytes* raw = state.get(maintainer_key(node));
    if (!raw) return std::nullopt;
    codec::Reader r(*raw);
    std::string domain = r.str();
    if (!r.complete()) return std::nullopt;
    return domain;
}

std::map<std::string, DomainInformation> live_domains(const ChainState& state) {
    std::map<std::string, DomainInformation> out;
    for (const auto& [key, value] : state.entries) {
        auto name = parse_storage_key(key);
        if (!name) continue;
        auto info = codec::decode_domain_info(value);
        if (!info.ok()) continue;
        if (!info.value().available) out.emplace(*name, std::move(info).take());
    }
    return out;
}

std::map<NodeId, std::string> rebuild_maintainer_index(const ChainState& state) {
    std::map<NodeId, std::string> out;
    for (const auto& [domain, info] : live_domains(state)) {
        for (const auto& node : info.maintainers) out[node] = domain;
    }
    return out;
}

std::map<NodeId, std::string> stored_maintainer_index(const ChainState& state) {
    std::map<NodeId, std::string> out;
    state.for_each_prefix(kMaintainerPrefix, [&](const Bytes& key, const Bytes& value) {
        if (key.size() != kMaintainerPrefix.size() + 32) return;
        NodeId node;
        std::copy(key.begin() + kMaintainerPrefix.size(), key.end(), node.bytes.begin());
        codec::Reader r(value);
        std::string domain = r.str();
        if (r.complete()) out[node] = domain;
    });
    return out;
}

}  // namespace chaindns::tldreg
