// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chaindns/errc.hpp"
#include "chaindns/state.hpp"
#include "chaindns/transaction.hpp"
#include "chaindns/types.hpp"

namespace chaindns {

enum class ChainKind { Root, Tld, Plain };

// Genesis-time configuration of one chain's runtime.
struct RuntimeConfig {
    ChainKind kind = ChainKind::Plain;
    std::string tld;                      // Tld chains: the label this network manages
    std::uint32_t min_maintainers = 1;    // Tld chains
    std::uint64_t request_lifetime = 50;  // Root chains: pending-request expiry, blocks
    std::uint64_t queue_cap = 10000;      // Root chains
};

struct ApplyContext {
    std::uint64_t block_number = 0;
    // Worker identity allowed to make privileged calls in this block: the
    // worker account of the node that authored the previous block, i.e. the
    // worker that ran most recently before this block was built.
    AccountId privileged_worker{};
    RuntimeConfig runtime;
};

// Result of applying one transaction. Dispatch failures (stale nonce,
// call unknown to this runtime) leave the state untouched and the
// transaction excluded from the block; registry failures keep the
// transaction included with its nonce consumed and fee collected.
struct TxApply {
    bool included = false;
    Errc result = Errc::Ok;
};

TxApply apply_transaction(ChainState& state, const Transaction& tx, const ApplyContext& ctx);

std::uint64_t expected_nonce(const ChainState& state, const AccountId& origin);

struct Block {
    std::uint64_t number = 0;
    Hash32 parent_hash{};
    std::vector<Transaction> transactions;
    NodeId author{};
    Hash32 state_root{};
};

Bytes encode_block(const Block& b);
Hash32 block_hash(const Block& b);

struct DroppedTx {
    Transaction tx;
    Errc reason = Errc::Ok;
};

// A block plus per-transaction registry outcomes and the transactions the
// author dropped, recorded for observability.
struct SealedBlock {
    Block block;
    Hash32 hash{};
    std::vector<Errc> tx_results;  // aligned with block.transactions
    std::vector<DroppedTx> dropped;
    std::uint64_t pruned_requests = 0;
};

// Deterministic single-writer chain. Sealing mutates state from exactly one
// logical thread of control; snapshots are immutable once published and may
// be read concurrently.
class Chain {
public:
    Chain(RuntimeConfig runtime, ChainState genesis, NodeId genesis_author);

    // Applies the pending transactions in order (dropping dispatch-invalid
    // ones), runs the block-initialization hook, and publishes the new
    // sealed state. Deterministic given (head, pending).
    const SealedBlock& seal(const NodeId& author, std::vector<Transaction> pending);

    std::shared_ptr<const ChainState> snapshot() const { return head_state_; }
    std::uint64_t head_number() const { return head_number_; }
    Hash32 head_hash() const { return head_hash_; }
    const std::vector<SealedBlock>& blocks() const { return blocks_; }
    const RuntimeConfig& runtime() const { return runtime_; }
    const ChainState& genesis_state() const { return genesis_; }
    NodeId genesis_author() const { return genesis_author_; }

private:
    RuntimeConfig runtime_;
    ChainState genesis_;
    NodeId genesis_author_;
    std::shared_ptr<const ChainState> head_state_;
    std::uint64_t head_number_ = 0;
    Hash32 head_hash_{};
    NodeId prev_author_;
    std::vector<SealedBlock> blocks_;
};

// Replays a recorded block sequence on top of a genesis state, with no
// off-chain workers involved, verifying parent linkage and recomputing
// every state root. Returns the roots produced.
struct ReplayResult {
    bool ok = false;
    std::string mismatch;  // empty when ok
    std::vector<Hash32> state_roots;
};
ReplayResult replay_blocks(const RuntimeConfig& runtime, const ChainState& genesis,
                           NodeId genesis_author, const std::vector<Block>& blocks);

}  // namespace chaindns
