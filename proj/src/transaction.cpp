// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/transaction.hpp"

#include "chaindns/codec.hpp"
#include "chaindns/hash.hpp"

namespace chaindns {

namespace {

enum CallTag : std::uint8_t {
    kRegisterTld = 0,
    kRegisterDomain = 1,
    kRevokeDomain = 2,
    kAmendChainspec = 3,
    kRegisterAssetForDomain = 4,
    kSubmitVerifiedDomain = 5,
    kRemoveProvider = 6,
    kAdvanceCursor = 7,
    kDiscardRequest = 8,
};

void write_call(codec::Writer& w, const Call& c) {
    std::visit(
        [&w](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, call::RegisterTld>) {
                w.u8(kRegisterTld);
                w.str(v.tld);
                codec::write_chain_spec(w, v.chain_spec);
            } else if constexpr (std::is_same_v<T, call::RegisterDomain>) {
                w.u8(kRegisterDomain);
                w.str(v.domain);
                codec::write_chain_spec(w, v.chain_spec);
                w.u32le(static_cast<std::uint32_t>(v.maintainers.size()));
                for (const auto& m : v.maintainers) w.id(m);
            } else if constexpr (std::is_same_v<T, call::RevokeDomain>) {
                w.u8(kRevokeDomain);
                w.str(v.domain);
            } else if constexpr (std::is_same_v<T, call::AmendChainspec>) {
                w.u8(kAmendChainspec);
                w.str(v.domain);
                codec::write_chain_spec(w, v.new_spec);
            } else if constexpr (std::is_same_v<T, call::RegisterAssetForDomain>) {
                w.u8(kRegisterAssetForDomain);
                w.str(v.domain);
                w.id(v.asset_hash);
            } else if constexpr (std::is_same_v<T, call::SubmitVerifiedDomain>) {
                w.u8(kSubmitVerifiedDomain);
                w.str(v.domain);
                w.id(v.asset_hash);
                w.u64le(v.seq_hint);
            } else if constexpr (std::is_same_v<T, call::RemoveProvider>) {
                w.u8(kRemoveProvider);
                w.str(v.domain);
            } else if constexpr (std::is_same_v<T, call::AdvanceCursor>) {
                w.u8(kAdvanceCursor);
                w.u64le(v.batch_size);
            } else if constexpr (std::is_same_v<T, call::DiscardRequest>) {
                w.u8(kDiscardRequest);
                w.u64le(v.seq);
            }
        },
        c);
}

Call read_call(codec::Reader& r) {
    switch (r.u8()) {
        case kRegisterTld: {
            call::RegisterTld v;
            v.tld = r.str();
            v.chain_spec = codec::read_chain_spec(r);
            return v;
        }
        case kRegisterDomain: {
            call::RegisterDomain v;
            v.domain = r.str();
            v.chain_spec = codec::read_chain_spec(r);
            std::uint32_t n = r.u32le();
            for (std::uint32_t i = 0; i < n && !r.failed(); ++i) {
                v.maintainers.push_back(r.id<NodeIdTag>());
            }
            return v;
        }
        case kRevokeDomain: {
            call::RevokeDomain v;
            v.domain = r.str();
            return v;
        }
        case kAmendChainspec: {
            call::AmendChainspec v;
            v.domain = r.str();
            v.new_spec = codec::read_chain_spec(r);
            return v;
        }
        case kRegisterAssetForDomain: {
            call::RegisterAssetForDomain v;
            v.domain = r.str();
            v.asset_hash = r.id<AssetHashTag>();
            return v;
        }
        case kSubmitVerifiedDomain: {
            call::SubmitVerifiedDomain v;
            v.domain = r.str();
            v.asset_hash = r.id<AssetHashTag>();
            v.seq_hint = r.u64le();
            return v;
        }
        case kRemoveProvider: {
            call::RemoveProvider v;
            v.domain = r.str();
            return v;
        }
        case kAdvanceCursor: {
            call::AdvanceCursor v;
            v.batch_size = r.u64le();
            return v;
        }
        case kDiscardRequest: {
            call::DiscardRequest v;
            v.seq = r.u64le();
            return v;
        }
        default:
            r.fail();
            return call::RegisterTld{};
    }
}

}  // namespace

std::string_view call_name(const Call& c) {
    static constexpr std::string_view kNames[] = {
        "register_tld",           "register_domain",       "revoke_domain",
        "amend_chainspec",        "register_asset_for_domain", "submit_verified_domain",
        "remove_provider",        "advance_cursor",        "discard_request",
    };
    return kNames[c.index()];
}

Bytes encode_transaction(const Transaction& tx) {
    codec::Writer w;
    w.id(tx.origin);
    w.u64le(tx.nonce);
    w.u64le(tx.fee);
    write_call(w, tx.call);
    return std::move(w).take();
}

Result<Transaction> decode_transaction(const Bytes& raw) {
    codec::Reader r(raw);
    Transaction tx;
    tx.origin = r.id<AccountIdTag>();
    tx.nonce = r.u64le();
    tx.fee = r.u64le();
    tx.call = read_call(r);
    if (!r.complete()) return Errc::MalformedValue;
    return tx;
}

Hash32 transaction_hash(const Transaction& tx) { return digest256(encode_transaction(tx)); }

}  // namespace chaindns
