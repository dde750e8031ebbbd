// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "chaindns/chain.hpp"
#include "chaindns/netsim/rpc.hpp"
#include "chaindns/workers.hpp"

namespace chaindns::netsim {

struct NetworkConfig {
    std::string network_id;
    std::uint32_t node_count = 4;
    std::uint64_t block_interval_ms = 1000;
    ChainKind kind = ChainKind::Plain;
    std::string tld;                    // Tld networks
    std::uint32_t min_maintainers = 1;  // Tld networks
    std::uint64_t request_lifetime = 50;
    std::uint64_t queue_cap = 10000;
    workers::WorkerSettings worker;
    ChainState genesis;
};

struct PeerEvent {
    enum class Kind { Join, Leave };
    Kind kind = Kind::Leave;
    NodeId node{};
    std::uint64_t at_block = 0;
};

class Simulator;

// One simulated blockchain network: a single shared chain (no forks), the
// per-node worker state, a pending transaction pool and the membership
// schedule. All nodes import blocks instantly, so one Chain stands in for
// every node's view.
class Network {
public:
    Network(Simulator& sim, NetworkConfig cfg);

    const NetworkConfig& config() const { return cfg_; }
    const std::string& id() const { return cfg_.network_id; }
    Chain& chain() { return chain_; }
    const Chain& chain() const { return chain_; }

    NodeId node_at(std::uint32_t index) const;
    std::vector<NodeId> connected_nodes() const;  // rotation order
    bool is_connected(const NodeId& node) const;

    void submit(Transaction tx);
    // Builds and submits a transaction with the next nonce for the origin,
    // accounting for transactions already waiting in the pool.
    Transaction submit_next(const AccountId& origin, Call call, std::uint64_t fee);
    std::uint64_t next_nonce_for(const AccountId& origin) const;
    std::size_t pool_size() const;

    bool reachable() const { return reachable_.load(); }
    void set_reachable(bool r) { reachable_.store(r); }

    // Activity recorded by off-chain workers, for observability in tests
    // and the demo. Node-local data, not consensus state.
    struct WorkerActivity {
        std::uint64_t block = 0;  // head when the worker ran
        NodeId node{};
        std::vector<std::string> revocations;
        std::vector<workers::ValidationOutcome> validations;
        workers::ReverificationOutcome reverification;
    };
    const std::vector<WorkerActivity>& worker_log() const { return worker_log_; }
    std::uint64_t revocations_submitted() const { return revocations_submitted_; }

private:
    friend class Simulator;

    struct NodeSlot {
        NodeId id{};
        std::uint32_t index = 0;
        bool connected = true;
        workers::PeerCache cache;
    };

    Result<void> schedule_event(const PeerEvent& ev);
    void apply_due_events(std::uint64_t up_to_block);
    void seal_and_run_workers(Simulator& sim);
    RpcEnvelope handle_rpc(const RpcEnvelope& req);
    NodeSlot* slot_of(const NodeId& node);

    Simulator& sim_;
    NetworkConfig cfg_;
    Chain chain_;
    std::vector<NodeSlot> slots_;  // by rotation index
    std::vector<PeerEvent> scheduled_;  // sorted by at_block, stable
    std::deque<Transaction> pool_;
    mutable std::mutex pool_mu_;
    std::atomic<bool> reachable_{true};
    std::atomic<std::uint64_t> rpc_rr_{0};
    std::vector<WorkerActivity> worker_log_;
    std::uint64_t revocations_submitted_ = 0;
};

// Deterministic in-process simulator of multiple networks. Sealing advances
// under an exclusive lock; the RPC surface takes shared locks and reads
// immutable snapshots, so any number of callers may query concurrently.
class Simulator {
public:
    explicit Simulator(std::uint64_t seed, std::uint64_t tick_ms = 1000);

    Result<Network*> spawn_network(NetworkConfig cfg);
    Result<void> inject_peer_event(const std::string& network_id, const PeerEvent& ev);

    // Seals `blocks` blocks on every network (sorted by network_id per
    // tick) and runs every node's off-chain workers after each seal.
    void advance(std::uint64_t blocks);
    Result<void> advance_network(const std::string& network_id, std::uint64_t blocks);

    RpcEnvelope rpc(const std::string& network_id, RpcEnvelope req);

    void set_reachable(const std::string& network_id, bool reachable);
    std::uint64_t now_ms() const { return now_ms_.load(); }
    std::uint64_t seed() const { return seed_; }

    Network* find(const std::string& network_id);
    const Network* find(const std::string& network_id) const;
    std::vector<std::string> network_ids() const;

    // In-process storage query used by off-chain workers; honors
    // reachability. Caller must already be inside the simulator lock
    // (worker runs) or hold no lock at all (tests).
    Result<std::optional<Bytes>> storage_query(const ChainSpec& target, const Bytes& key);

private:
    friend class Network;
    RpcEnvelope route_rpc(const std::string& network_id, RpcEnvelope req);

    std::uint64_t seed_;
    std::uint64_t tick_ms_;
    std::atomic<std::uint64_t> now_ms_{0};
    std::map<std::string, std::unique_ptr<Network>> networks_;
    mutable std::shared_mutex mu_;
};

// In-process client transport: routes envelope calls straight into the
// simulator's RPC surface.
class InprocTransport : public RpcTransport {
public:
    explicit InprocTransport(Simulator& sim) : sim_(sim) {}
    Result<Json> call(const ChainSpec& target, const std::string& method, Json params) override;

private:
    Simulator& sim_;
    std::atomic<std::uint64_t> next_id_{1};
};

// Scenario file: {"seed": n, "tick_ms": n, "networks": [...], "events": [...]}.
Result<std::unique_ptr<Simulator>> load_scenario(const std::string& json_text);
Result<std::unique_ptr<Simulator>> load_scenario_file(const std::string& path);

}  // namespace chaindns::netsim
