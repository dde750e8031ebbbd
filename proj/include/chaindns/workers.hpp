// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chaindns/result.hpp"
#include "chaindns/state.hpp"
#include "chaindns/transaction.hpp"
#include "chaindns/types.hpp"

// Per-node post-block workers. A worker never mutates chain state directly:
// everything it decides is fed back through submitted transactions, so a
// chain replayed from its blocks alone reproduces the same state.
namespace chaindns::workers {

// Node-local set of peers observed on the previous run. Not consensus state.
using PeerCache = std::set<NodeId>;

struct WorkerSettings {
    std::uint32_t max_validation_requests = 16;
    std::uint64_t reverify_batch = 8;
    std::uint64_t tx_fee = 1;
    int transport_attempts = 2;  // one retry on transport failure
};

// Read + submit access to the worker's own chain.
struct ChainHandle {
    std::function<std::shared_ptr<const ChainState>()> snapshot;
    std::function<void(Call call, std::uint64_t fee)> submit;
};

// Cross-chain storage query against the network described by a ChainSpec.
// Outer result reports transport failure; the inner optional is the value
// at the key, if present.
struct TransportHandle {
    std::function<Result<std::optional<Bytes>>(const ChainSpec& target, const Bytes& key)>
        get_storage;
};

struct WorkerContext {
    NodeId self_node{};
    bool is_author = false;  // did this node author the block just sealed?
    ChainHandle chain;
    TransportHandle transport;
    WorkerSettings settings;
};

// Mandatory participation: diff the cached peer set against the current one
// and submit a revocation for every disconnected node that maintains a
// domain. Non-authors only refresh their caches. Returns the domains whose
// revocation was submitted.
std::vector<std::string> run_mandatory_participation(const WorkerContext& ctx, PeerCache& cache,
                                                     const std::set<NodeId>& current_participants);

enum class ValidationStatus { Verified, Rejected, Deferred };
enum class ValidationCause {
    None,
    UnknownTld,
    DomainNotFound,
    DomainAvailable,
    RequesterMismatch,
    TransportTimeout,
    MalformedRecord,
};
std::string_view validation_cause_name(ValidationCause cause);

struct ValidationOutcome {
    std::uint64_t seq = 0;
    PendingRequest request;
    ValidationStatus status = ValidationStatus::Deferred;
    ValidationCause cause = ValidationCause::None;
};

// Pending-request validation on the root network's authoring node: fetch the
// TLD's connection details, query the domain record cross-chain at its
// derived storage key, and settle the request (verify or discard). Requests
// whose TLD network cannot be reached are left queued.
std::vector<ValidationOutcome> run_asset_validation(const WorkerContext& ctx,
                                                    std::uint32_t max_requests);

struct ReverificationOutcome {
    std::vector<std::string> batch;     // providers examined this cycle
    std::vector<std::string> removals;  // removal transactions submitted
    std::vector<std::string> skipped;   // transport failures, retried on wrap
};

// Batched provider re-verification on the root network's authoring node.
ReverificationOutcome run_provider_reverification(const WorkerContext& ctx,
                                                  std::uint64_t batch_size);

// Strict decode of a remote Domain Information value; trailing bytes are
// rejected.
Result<DomainInformation> decode_remote_domain_info(const Bytes& raw);

}  // namespace chaindns::workers
