// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/netsim/netsim.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "chaindns/codec.hpp"
#include "chaindns/hash.hpp"
#include "chaindns/registry/asset.hpp"
#include "chaindns/registry/root.hpp"
#include "chaindns/registry/tld.hpp"

namespace chaindns::netsim {

namespace {
RuntimeConfig runtime_of(const NetworkConfig& cfg) {
    RuntimeConfig rt;
    rt.kind = cfg.kind;
    rt.tld = cfg.tld;
    rt.min_maintainers = cfg.min_maintainers;
    rt.request_lifetime = cfg.request_lifetime;
    rt.queue_cap = cfg.queue_cap;
    return rt;
}
}  // namespace

Network::Network(Simulator& sim, NetworkConfig cfg)
    : sim_(sim),
      cfg_(std::move(cfg)),
      chain_(runtime_of(cfg_), cfg_.genesis, derive_node_id(sim.seed(), cfg_.network_id, 0)) {
    slots_.reserve(cfg_.node_count);
    for (std::uint32_t i = 0; i < cfg_.node_count; ++i) {
        NodeSlot slot;
        slot.id = derive_node_id(sim_.seed(), cfg_.network_id, i);
        slot.index = i;
        slot.connected = true;
        slots_.push_back(std::move(slot));
    }
}

NodeId Network::node_at(std::uint32_t index) const {
    return derive_node_id(sim_.seed(), cfg_.network_id, index);
}

std::vector<NodeId> Network::connected_nodes() const {
    std::vector<NodeId> out;
    for (const auto& slot : slots_) {
        if (slot.connected) out.push_back(slot.id);
    }
    return out;
}

bool Network::is_connected(const NodeId& node) const {
    for (const auto& slot : slots_) {
        if (slot.id == node) return slot.connected;
    }
    return false;
}

Network::NodeSlot* Network::slot_of(const NodeId& node) {
    for (auto& slot : slots_) {
        if (slot.id == node) return &slot;
    }
    return nullptr;
}

void Network::submit(Transaction tx) {
    std::lock_guard lock(pool_mu_);
    pool_.push_back(std::move(tx));
}

std::uint64_t Network::next_nonce_for(const AccountId& origin) const {
    std::lock_guard lock(pool_mu_);
    std::uint64_t base = expected_nonce(*chain_.snapshot(), origin);
    for (const auto& tx : pool_) {
        if (tx.origin == origin) ++base;
    }
    return base;
}

Transaction Network::submit_next(const AccountId& origin, Call call, std::uint64_t fee) {
    std::lock_guard lock(pool_mu_);
    std::uint64_t nonce = expected_nonce(*chain_.snapshot(), origin);
    for (const auto& tx : pool_) {
        if (tx.origin == origin) ++nonce;
    }
    Transaction tx{origin, nonce, std::move(call), fee};
    pool_.push_back(tx);
    return tx;
}

std::size_t Network::pool_size() const {
    std::lock_guard lock(pool_mu_);
    return pool_.size();
}

Result<void> Network::schedule_event(const PeerEvent& ev) {
    // project the node's connection status after all already-scheduled
    // events, so invalid sequences are refused at injection time
    NodeSlot* slot = slot_of(ev.node);
    bool projected = slot != nullptr && slot->connected;
    for (const auto& pending : scheduled_) {
        if (pending.node == ev.node) projected = pending.kind == PeerEvent::Kind::Join;
    }
    if (ev.kind == PeerEvent::Kind::Leave && !projected) return Errc::InvalidEvent;
    if (ev.kind == PeerEvent::Kind::Join && projected) return Errc::InvalidEvent;

    auto pos = std::upper_bound(
        scheduled_.begin(), scheduled_.end(), ev,
        [](const PeerEvent& a, const PeerEvent& b) { return a.at_block < b.at_block; });
    scheduled_.insert(pos, ev);

    // an event scheduled at or before the current head takes effect now
    apply_due_events(chain_.head_number());
    return {};
}

void Network::apply_due_events(std::uint64_t up_to_block) {
    while (!scheduled_.empty() && scheduled_.front().at_block <= up_to_block) {
        PeerEvent ev = scheduled_.front();
        scheduled_.erase(scheduled_.begin());
        NodeSlot* slot = slot_of(ev.node);
        if (ev.kind == PeerEvent::Kind::Leave) {
            if (slot && slot->connected) {
                slot->connected = false;
                slot->cache.clear();
            }
        } else {
            if (slot) {
                if (!slot->connected) {
                    slot->connected = true;
                    slot->cache.clear();  // a rejoining node starts fresh
                }
            } else {
                NodeSlot fresh;
                fresh.id = ev.node;
                fresh.index = static_cast<std::uint32_t>(slots_.size());
                fresh.connected = true;
                slots_.push_back(std::move(fresh));
            }
        }
    }
}

void Network::seal_and_run_workers(Simulator& sim) {
    std::uint64_t next = chain_.head_number() + 1;
    apply_due_events(next);

    std::vector<NodeSlot*> connected;
    for (auto& slot : slots_) {
        if (slot.connected) connected.push_back(&slot);
    }
    if (connected.empty()) return;  // no author: the network stalls

    const NodeId author = connected[(next - 1) % connected.size()]->id;

    std::vector<Transaction> pending;
    {
        std::lock_guard lock(pool_mu_);
        pending.assign(pool_.begin(), pool_.end());
        pool_.clear();
    }
    chain_.seal(author, std::move(pending));

    std::set<NodeId> current;
    for (const auto* slot : connected) current.insert(slot->id);

    for (auto* slot : connected) {
        workers::WorkerContext ctx;
        ctx.self_node = slot->id;
        ctx.is_author = slot->id == author;
        ctx.settings = cfg_.worker;
        ctx.chain.snapshot = [this] { return chain_.snapshot(); };
        ctx.chain.submit = [this, node = slot->id](Call call, std::uint64_t fee) {
            submit_next(worker_account_for(node), std::move(call), fee);
        };
        ctx.transport.get_storage = [&sim](const ChainSpec& target, const Bytes& key) {
            return sim.storage_query(target, key);
        };

        WorkerActivity activity;
        activity.block = chain_.head_number();
        activity.node = slot->id;
        if (cfg_.kind == ChainKind::Tld) {
            activity.revocations = workers::run_mandatory_participation(ctx, slot->cache, current);
        } else if (cfg_.kind == ChainKind::Root && ctx.is_author) {
            activity.validations =
                workers::run_asset_validation(ctx, cfg_.worker.max_validation_requests);
            activity.reverification =
                workers::run_provider_reverification(ctx, cfg_.worker.reverify_batch);
        }
        revocations_submitted_ += activity.revocations.size();
        if (!activity.revocations.empty() || !activity.validations.empty() ||
            !activity.reverification.batch.empty()) {
            worker_log_.push_back(std::move(activity));
        }
    }
}

RpcEnvelope Network::handle_rpc(const RpcEnvelope& req) {
    if (!reachable_.load()) {
        return make_error(req, kRpcNetworkUnreachable, "network unreachable");
    }
    std::vector<NodeId> connected = connected_nodes();
    if (connected.empty()) {
        return make_error(req, kRpcNetworkUnreachable, "no connected nodes");
    }
    // round-robin routing over connected nodes; every node answers from the
    // same sealed snapshot in this simulator
    rpc_rr_.fetch_add(1, std::memory_order_relaxed);

    auto snapshot = chain_.snapshot();
    const Json& params = req.params;
    auto need_string = [&](std::size_t i) -> const std::string* {
        if (params.size() <= i || !params[i].is_string()) return nullptr;
        return params[i].get_ptr<const std::string*>();
    };

    if (req.method == "root_queryTld") {
        const std::string* tld = need_string(0);
        if (!tld) return make_error(req, kRpcBadParams, "expected [tld]");
        auto spec = rootreg::query_tld(*snapshot, *tld);
        return make_result(req, spec ? chain_spec_json(*spec) : Json(nullptr));
    }
    if (req.method == "tld_queryDomain") {
        const std::string* domain = need_string(0);
        if (!domain) return make_error(req, kRpcBadParams, "expected [domain]");
        auto info = tldreg::query_domain(*snapshot, *domain);
        return make_result(req, info ? domain_info_json(*info) : Json(nullptr));
    }
    if (req.method == "asset_queryProviders") {
        const std::string* hex = need_string(0);
        if (!hex) return make_error(req, kRpcBadParams, "expected [asset_hash_hex]");
        auto hash = AssetHash::from_hex_str(*hex);
        if (!hash) return make_error(req, kRpcBadParams, "asset hash must be 32 bytes of hex");
        Json out = Json::array();
        for (const auto& domain : assetreg::query_asset_providers(*snapshot, *hash)) {
            out.push_back(domain);
        }
        return make_result(req, std::move(out));
    }
    if (req.method == "asset_pendingCount") {
        return make_result(req, assetreg::pending_count(*snapshot));
    }
    if (req.method == "state_getStorage") {
        const std::string* hex = need_string(0);
        if (!hex) return make_error(req, kRpcBadParams, "expected [key_hex]");
        auto key = from_hex(*hex);
        if (!key) return make_error(req, kRpcBadParams, "invalid hex key");
        const Bytes* value = snapshot->get(*key);
        return make_result(req, value ? Json(to_hex(*value)) : Json(nullptr));
    }
    if (req.method == "system_peers") {
        Json out = Json::array();
        for (const auto& node : connected) out.push_back(node.hex());
        return make_result(req, std::move(out));
    }
    if (req.method == "author_submitExtrinsic") {
        const std::string* hex = need_string(0);
        if (!hex) return make_error(req, kRpcBadParams, "expected [tx_hex]");
        auto raw = from_hex(*hex);
        if (!raw) return make_error(req, kRpcBadParams, "invalid hex transaction");
        auto tx = decode_transaction(*raw);
        if (!tx.ok()) return make_error(req, kRpcBadParams, "malformed transaction");
        Hash32 hash = transaction_hash(tx.value());
        submit(std::move(tx).take());
        Json out;
        out["accepted"] = true;
        out["tx_hash"] = hash.hex();
        return make_result(req, std::move(out));
    }
    return make_error(req, kRpcUnknownMethod, "unknown method: " + req.method);
}

Simulator::Simulator(std::uint64_t seed, std::uint64_t tick_ms) : seed_(seed), tick_ms_(tick_ms) {}

Result<Network*> Simulator::spawn_network(NetworkConfig cfg) {
    std::unique_lock lock(mu_);
    if (cfg.network_id.empty() || cfg.node_count == 0 || cfg.block_interval_ms == 0) {
        return Errc::SetupFailed;
    }
    if (networks_.contains(cfg.network_id)) return Errc::DuplicateNetworkId;
    auto net = std::make_unique<Network>(*this, std::move(cfg));
    Network* raw = net.get();
    networks_.emplace(raw->id(), std::move(net));
    return raw;
}

Result<void> Simulator::inject_peer_event(const std::string& network_id, const PeerEvent& ev) {
    std::unique_lock lock(mu_);
    auto it = networks_.find(network_id);
    if (it == networks_.end()) return Errc::InvalidEvent;
    return it->second->schedule_event(ev);
}

void Simulator::advance(std::uint64_t blocks) {
    std::unique_lock lock(mu_);
    for (std::uint64_t i = 0; i < blocks; ++i) {
        now_ms_.fetch_add(tick_ms_);
        for (auto& [id, net] : networks_) {
            net->seal_and_run_workers(*this);
        }
    }
}

Result<void> Simulator::advance_network(const std::string& network_id, std::uint64_t blocks) {
    std::unique_lock lock(mu_);
    auto it = networks_.find(network_id);
    if (it == networks_.end()) return Errc::NetworkUnreachable;
    for (std::uint64_t i = 0; i < blocks; ++i) {
        now_ms_.fetch_add(tick_ms_);
        it->second->seal_and_run_workers(*this);
    }
    return {};
}

RpcEnvelope Simulator::rpc(const std::string& network_id, RpcEnvelope req) {
    std::shared_lock lock(mu_);
    return route_rpc(network_id, std::move(req));
}

RpcEnvelope Simulator::route_rpc(const std::string& network_id, RpcEnvelope req) {
    auto it = networks_.find(network_id);
    if (it == networks_.end()) {
        return make_error(req, kRpcNetworkUnreachable, "unknown network: " + network_id);
    }
    return it->second->handle_rpc(req);
}

void Simulator::set_reachable(const std::string& network_id, bool reachable) {
    std::shared_lock lock(mu_);
    auto it = networks_.find(network_id);
    if (it != networks_.end()) it->second->set_reachable(reachable);
}

Network* Simulator::find(const std::string& network_id) {
    std::shared_lock lock(mu_);
    auto it = networks_.find(network_id);
    return it == networks_.end() ? nullptr : it->second.get();
}

const Network* Simulator::find(const std::string& network_id) const {
    std::shared_lock lock(mu_);
    auto it = networks_.find(network_id);
    return it == networks_.end() ? nullptr : it->second.get();
}

std::vector<std::string> Simulator::network_ids() const {
    std::shared_lock lock(mu_);
    std::vector<std::string> out;
    for (const auto& [id, net] : networks_) out.push_back(id);
    return out;
}

Result<std::optional<Bytes>> Simulator::storage_query(const ChainSpec& target, const Bytes& key) {
    auto network_id = payload_network_id(target);
    if (!network_id) return Errc::TransportError;
    auto it = networks_.find(*network_id);
    if (it == networks_.end()) return Errc::NetworkUnreachable;
    Network& net = *it->second;
    if (!net.reachable() || net.connected_nodes().empty()) return Errc::NetworkUnreachable;
    auto snapshot = net.chain().snapshot();
    const Bytes* value = snapshot->get(key);
    if (!value) return std::optional<Bytes>{};
    return std::optional<Bytes>{*value};
}

Result<Json> InprocTransport::call(const ChainSpec& target, const std::string& method,
                                   Json params) {
    bump_thread_call_count();
    auto network_id = payload_network_id(target);
    if (!network_id) return Errc::TransportError;
    RpcEnvelope req = make_request(next_id_.fetch_add(1), method, std::move(params));
    RpcEnvelope resp = sim_.rpc(*network_id, std::move(req));
    if (resp.is_error()) {
        switch (resp.error->code) {
            case kRpcNetworkUnreachable: return Errc::NetworkUnreachable;
            case kRpcUnknownMethod: return Errc::UnknownMethod;
            default: return Errc::TransportError;
        }
    }
    return resp.result;
}

namespace {

Result<NetworkConfig> network_config_from(const Json& j) {
    if (!j.is_object()) return Errc::MalformedValue;
    NetworkConfig cfg;
    if (!j.contains("network_id") || !j["network_id"].is_string()) return Errc::MalformedValue;
    cfg.network_id = j["network_id"].get<std::string>();
    cfg.node_count = j.value("node_count", 4u);
    cfg.block_interval_ms = j.value("block_interval_ms", std::uint64_t{1000});
    std::string kind = j.value("kind", std::string("plain"));
    if (kind == "root") {
        cfg.kind = ChainKind::Root;
    } else if (kind == "tld") {
        cfg.kind = ChainKind::Tld;
    } else if (kind == "plain") {
        cfg.kind = ChainKind::Plain;
    } else {
        return Errc::MalformedValue;
    }
    cfg.tld = j.value("tld", std::string());
    cfg.min_maintainers = j.value("min_maintainers", 1u);
    cfg.request_lifetime = j.value("request_lifetime", std::uint64_t{50});
    cfg.queue_cap = j.value("queue_cap", std::uint64_t{10000});
    if (j.contains("worker") && j["worker"].is_object()) {
        const Json& w = j["worker"];
        cfg.worker.max_validation_requests = w.value("max_validation_requests", 16u);
        cfg.worker.reverify_batch = w.value("reverify_batch", std::uint64_t{8});
    }
    if (cfg.kind == ChainKind::Tld && cfg.tld.empty()) return Errc::MalformedValue;
    return cfg;
}

}  // namespace

Result<std::unique_ptr<Simulator>> load_scenario(const std::string& json_text) {
    Json j = Json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return Errc::MalformedValue;
    std::uint64_t seed = j.value("seed", std::uint64_t{42});
    std::uint64_t tick_ms = j.value("tick_ms", std::uint64_t{1000});
    auto sim = std::make_unique<Simulator>(seed, tick_ms);

    if (!j.contains("networks") || !j["networks"].is_array()) return Errc::MalformedValue;
    for (const Json& nj : j["networks"]) {
        auto cfg = network_config_from(nj);
        if (!cfg.ok()) return cfg.error();
        auto spawned = sim->spawn_network(std::move(cfg).take());
        if (!spawned.ok()) return spawned.error();
    }
    for (const Json& ej : j.value("events", Json::array())) {
        if (!ej.is_object()) return Errc::MalformedValue;
        std::string kind = ej.value("kind", std::string());
        std::string network = ej.value("network", std::string());
        if (!ej.contains("at_block")) return Errc::MalformedValue;
        PeerEvent ev;
        if (kind == "leave") {
            ev.kind = PeerEvent::Kind::Leave;
        } else if (kind == "join") {
            ev.kind = PeerEvent::Kind::Join;
        } else {
            return Errc::MalformedValue;
        }
        ev.at_block = ej["at_block"].get<std::uint64_t>();
        if (ej.contains("node_index")) {
            ev.node = derive_node_id(seed, network, ej["node_index"].get<std::uint32_t>());
        } else if (ej.contains("node_hex")) {
            auto node = NodeId::from_hex_str(ej["node_hex"].get<std::string>());
            if (!node) return Errc::MalformedValue;
            ev.node = *node;
        } else {
            return Errc::MalformedValue;
        }
        auto injected = sim->inject_peer_event(network, ev);
        if (!injected.ok()) return injected.error();
    }
    return sim;
}

Result<std::unique_ptr<Simulator>> load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return Errc::IoError;
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_scenario(buffer.str());
}

}  // namespace chaindns::netsim
