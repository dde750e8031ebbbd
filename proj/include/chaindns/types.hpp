// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaindns/bytes.hpp"

namespace chaindns {

// 32-byte opaque identifier with a type tag so node, account and digest
// values cannot be mixed up.
template <typename Tag>
struct Id32 {
    std::array<std::uint8_t, 32> bytes{};

    auto operator<=>(const Id32&) const = default;

    std::string hex() const { return to_hex(bytes.data(), bytes.size()); }

    static std::optional<Id32> from_hex_str(std::string_view hex) {
        auto raw = from_hex(hex);
        if (!raw || raw->size() != 32) return std::nullopt;
        Id32 id;
        std::copy(raw->begin(), raw->end(), id.bytes.begin());
        return id;
    }
};

using NodeId = Id32<struct NodeIdTag>;
using AccountId = Id32<struct AccountIdTag>;
using AssetHash = Id32<struct AssetHashTag>;
using Hash32 = Id32<struct Hash32Tag>;

// Connection information for one blockchain network. The payload is an
// opaque blob as far as the registries are concerned; clients interpret it
// when dialing the network.
struct ChainSpec {
    std::string name;
    std::string id;
    Bytes payload;

    std::uint64_t payload_size_bytes() const { return payload.size(); }
    bool operator==(const ChainSpec&) const = default;
};

// Per-domain record kept by a TLD network.
struct DomainInformation {
    AccountId creator{};
    std::optional<ChainSpec> chain_specifications;
    std::vector<NodeId> maintainers;
    bool available = false;

    bool operator==(const DomainInformation&) const = default;
};

// One TLD entry on the root network.
struct TldRecord {
    std::string tld;
    ChainSpec chain_spec;
    AccountId registrant{};

    bool operator==(const TldRecord&) const = default;
};

// Queued asset-registration request awaiting off-chain validation.
struct PendingRequest {
    AccountId requester{};
    std::string domain;
    AssetHash asset_hash{};
    std::uint64_t timestamp = 0;  // block number at submission

    bool operator==(const PendingRequest&) const = default;
};

// Label syntax shared by TLD names and the name part of a domain:
// [a-z0-9][a-z0-9-]{0,62}
bool valid_label(std::string_view label);

// Domains are exactly two labels: "<name>.<tld>".
struct DomainName {
    std::string name;
    std::string tld;
};
std::optional<DomainName> parse_domain(std::string_view domain);

}  // namespace chaindns
