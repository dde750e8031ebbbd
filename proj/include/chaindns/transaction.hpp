// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "chaindns/result.hpp"
#include "chaindns/types.hpp"

namespace chaindns {

namespace call {

struct RegisterTld {
    std::string tld;
    ChainSpec chain_spec;
    bool operator==(const RegisterTld&) const = default;
};

struct RegisterDomain {
    std::string domain;
    ChainSpec chain_spec;
    std::vector<NodeId> maintainers;
    bool operator==(const RegisterDomain&) const = default;
};

struct RevokeDomain {  // worker-privileged
    std::string domain;
    bool operator==(const RevokeDomain&) const = default;
};

struct AmendChainspec {
    std::string domain;
    ChainSpec new_spec;
    bool operator==(const AmendChainspec&) const = default;
};

struct RegisterAssetForDomain {
    std::string domain;
    AssetHash asset_hash{};
    bool operator==(const RegisterAssetForDomain&) const = default;
};

constexpr std::uint64_t kNoSeqHint = ~0ULL;

struct SubmitVerifiedDomain {  // worker-privileged
    std::string domain;
    AssetHash asset_hash{};
    // Queue position of the request that was validated; lets the dispatch
    // remove exactly that entry instead of the oldest (domain, hash) match.
    std::uint64_t seq_hint = kNoSeqHint;
    bool operator==(const SubmitVerifiedDomain&) const = default;
};

struct RemoveProvider {  // worker-privileged
    std::string domain;
    bool operator==(const RemoveProvider&) const = default;
};

struct AdvanceCursor {  // worker-privileged
    std::uint64_t batch_size = 0;
    bool operator==(const AdvanceCursor&) const = default;
};

struct DiscardRequest {  // worker-privileged: drop a rejected pending request
    std::uint64_t seq = 0;
    bool operator==(const DiscardRequest&) const = default;
};

}  // namespace call

using Call = std::variant<call::RegisterTld, call::RegisterDomain, call::RevokeDomain,
                          call::AmendChainspec, call::RegisterAssetForDomain,
                          call::SubmitVerifiedDomain, call::RemoveProvider,
                          call::AdvanceCursor, call::DiscardRequest>;

std::string_view call_name(const Call& c);

// Signed, ordered extrinsic. Origins are asserted rather than
// signature-verified; nonces are tracked per origin on chain.
struct Transaction {
    AccountId origin{};
    std::uint64_t nonce = 0;
    Call call;
    std::uint64_t fee = 1;

    bool operator==(const Transaction&) const = default;
};

Bytes encode_transaction(const Transaction& tx);
Result<Transaction> decode_transaction(const Bytes& raw);

Hash32 transaction_hash(const Transaction& tx);

}  // namespace chaindns
