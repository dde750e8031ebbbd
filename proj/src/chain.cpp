// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/chain.hpp"

#include "chaindns/codec.hpp"
#include "chaindns/hash.hpp"
#include "chaindns/registry/asset.hpp"
#include "chaindns/registry/root.hpp"
#include "chaindns/registry/tld.hpp"

namespace chaindns {

namespace {

const Bytes kNoncePrefix = to_bytes("nonce/");

Bytes nonce_key(const AccountId& origin) {
    Bytes key = kNoncePrefix;
    key.insert(key.end(), origin.bytes.begin(), origin.bytes.end());
    return key;
}

bool call_known_to(ChainKind kind, const Call& call) {
    switch (kind) {
        case ChainKind::Root:
            return std::holds_alternative<call::RegisterTld>(call) ||
                   std::holds_alternative<call::RegisterAssetForDomain>(call) ||
                   std::holds_alternative<call::SubmitVerifiedDomain>(call) ||
                   std::holds_alternative<call::RemoveProvider>(call) ||
                   std::holds_alternative<call::AdvanceCursor>(call) ||
                   std::holds_alternative<call::DiscardRequest>(call);
        case ChainKind::Tld:
            return std::holds_alternative<call::RegisterDomain>(call) ||
                   std::holds_alternative<call::RevokeDomain>(call) ||
                   std::holds_alternative<call::AmendChainspec>(call);
        case ChainKind::Plain:
            return false;
    }
    return false;
}

// Registry dispatch. Every registry operation validates before its first
// write, so a non-Ok result implies the state was left untouched.
Errc dispatch(ChainState& state, const Transaction& tx, const ApplyContext& ctx) {
    const bool worker = tx.origin == ctx.privileged_worker;
    const RuntimeConfig& rt = ctx.runtime;
    return std::visit(
        [&](const auto& c) -> Errc {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, call::RegisterTld>) {
                return rootreg::register_tld(state, tx.origin, c.tld, c.chain_spec);
            } else if constexpr (std::is_same_v<T, call::RegisterDomain>) {
                return tldreg::register_domain(state, tx.origin, c.domain, c.chain_spec,
                                               c.maintainers, rt.tld, rt.min_maintainers);
            } else if constexpr (std::is_same_v<T, call::RevokeDomain>) {
                return tldreg::revoke_domain(state, c.domain, worker);
            } else if constexpr (std::is_same_v<T, call::AmendChainspec>) {
                return tldreg::amend_chainspec(state, tx.origin, c.domain, c.new_spec);
            } else if constexpr (std::is_same_v<T, call::RegisterAssetForDomain>) {
                return assetreg::register_asset_for_domain(state, tx.origin, c.domain,
                                                           c.asset_hash, ctx.block_number,
                                                           rt.queue_cap);
            } else if constexpr (std::is_same_v<T, call::SubmitVerifiedDomain>) {
                return assetreg::submit_verified_domain(state, c.domain, c.asset_hash, c.seq_hint,
                                                        worker);
            } else if constexpr (std::is_same_v<T, call::RemoveProvider>) {
                return assetreg::remove_provider(state, c.domain, worker);
            } else if constexpr (std::is_same_v<T, call::AdvanceCursor>) {
                if (!worker) return Errc::NotAuthorized;
                assetreg::advance_cursor(state, c.batch_size);
                return Errc::Ok;
            } else if constexpr (std::is_same_v<T, call::DiscardRequest>) {
                return assetreg::discard_request(state, c.seq, worker);
            }
        },
        tx.call);
}

}  // namespace

std::uint64_t expected_nonce(const ChainState& state, const AccountId& origin) {
    return state.get_u64(nonce_key(origin)).value_or(0);
}

TxApply apply_transaction(ChainState& state, const Transaction& tx, const ApplyContext& ctx) {
    if (tx.nonce != expected_nonce(state, tx.origin)) {
        return {false, Errc::StaleNonce};
    }
    if (!call_known_to(ctx.runtime.kind, tx.call)) {
        return {false, Errc::UnknownCall};
    }
    // nonce and fee are consumed whether or not the registry accepts the call
    state.put_u64(nonce_key(tx.origin), tx.nonce + 1);
    state.fee_pool += tx.fee;
    return {true, dispatch(state, tx, ctx)};
}

Bytes encode_block(const Block& b) {
    codec::Writer w;
    w.u64le(b.number);
    w.id(b.parent_hash);
    w.id(b.author);
    w.id(b.state_root);
    w.u32le(static_cast<std::uint32_t>(b.transactions.size()));
    for (const auto& tx : b.transactions) {
        Bytes raw = encode_transaction(tx);
        w.u32le(static_cast<std::uint32_t>(raw.size()));
        w.raw(raw);
    }
    return std::move(w).take();
}

Hash32 block_hash(const Block& b) { return digest256(encode_block(b)); }

namespace {

Hash32 genesis_hash(const ChainState& genesis) {
    codec::Writer w;
    w.raw(to_bytes("chaindns/genesis/"));
    w.id(state_root(genesis));
    return digest256(w.bytes());
}

struct BuiltBlock {
    SealedBlock sealed;
    ChainState state;
};

// Shared by live sealing and replay verification: applies the hook and the
// given transactions on top of `state`, producing the sealed block record.
BuiltBlock build_block(const RuntimeConfig& runtime, ChainState state, std::uint64_t number,
                       Hash32 parent, const NodeId& author, const NodeId& prev_author,
                       std::vector<Transaction> pending) {
    BuiltBlock out;
    out.sealed.pruned_requests =
        runtime.kind == ChainKind::Root
            ? assetreg::prune_expired_requests(state, number, runtime.request_lifetime)
            : 0;

    ApplyContext ctx{number, worker_account_for(prev_author), runtime};
    Block& block = out.sealed.block;
    block.number = number;
    block.parent_hash = parent;
    block.author = author;
    for (auto& tx : pending) {
        TxApply applied = apply_transaction(state, tx, ctx);
        if (applied.included) {
            block.transactions.push_back(std::move(tx));
            out.sealed.tx_results.push_back(applied.result);
        } else {
            out.sealed.dropped.push_back(DroppedTx{std::move(tx), applied.result});
        }
    }
    block.state_root = state_root(state);
    out.sealed.hash = block_hash(block);
    out.state = std::move(state);
    return out;
}

}  // namespace

Chain::Chain(RuntimeConfig runtime, ChainState genesis, NodeId genesis_author)
    : runtime_(std::move(runtime)),
      genesis_(std::move(genesis)),
      genesis_author_(genesis_author),
      head_state_(std::make_shared<const ChainState>(genesis_)),
      head_hash_(genesis_hash(genesis_)),
      prev_author_(genesis_author) {}

const SealedBlock& Chain::seal(const NodeId& author, std::vector<Transaction> pending) {
    BuiltBlock built = build_block(runtime_, *head_state_, head_number_ + 1, head_hash_, author,
                                   prev_author_, std::move(pending));
    head_state_ = std::make_shared<const ChainState>(std::move(built.state));
    head_number_ = built.sealed.block.number;
    head_hash_ = built.sealed.hash;
    prev_author_ = author;
    blocks_.push_back(std::move(built.sealed));
    return blocks_.back();
}

ReplayResult replay_blocks(const RuntimeConfig& runtime, const ChainState& genesis,
                           NodeId genesis_author, const std::vector<Block>& blocks) {
    ReplayResult result;
    ChainState state = genesis;
    Hash32 parent = genesis_hash(genesis);
    NodeId prev_author = genesis_author;
    std::uint64_t number = 0;
    for (const auto& recorded : blocks) {
        if (recorded.number != number + 1) {
            result.mismatch = "block number discontinuity at " + std::to_string(recorded.number);
            return result;
        }
        if (recorded.parent_hash != parent) {
            result.mismatch = "parent hash mismatch at block " + std::to_string(recorded.number);
            return result;
        }
        BuiltBlock built = build_block(runtime, std::move(state), recorded.number, parent,
                                       recorded.author, prev_author, recorded.transactions);
        if (!built.sealed.dropped.empty()) {
            result.mismatch =
                "recorded block " + std::to_string(recorded.number) + " contains invalid tx";
            return result;
        }
        if (built.sealed.block.state_root != recorded.state_root) {
            result.mismatch = "state root mismatch at block " + std::to_string(recorded.number);
            return result;
        }
        state = std::move(built.state);
        parent = built.sealed.hash;
        prev_author = recorded.author;
        number = recorded.number;
        result.state_roots.push_back(built.sealed.block.state_root);
    }
    result.ok = true;
    return result;
}

}  // namespace chaindns
