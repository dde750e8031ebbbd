// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "chaindns/netsim/netsim.hpp"
#include "chaindns/netsim/rpc.hpp"

namespace chaindns::netsim {

// Exposes every simulated network over newline-delimited JSON on a local
// TCP port (one listener per network). The wire shapes are identical to the
// in-process envelopes.
class TcpGateway {
public:
    explicit TcpGateway(Simulator& sim) : sim_(sim) {}
    ~TcpGateway() { stop(); }

    Result<void> start();
    void stop();
    // Port serving the given network; 0 when not started.
    std::uint16_t port_of(const std::string& network_id) const;

private:
    struct Listener {
        std::string network_id;
        std::atomic<int> fd{-1};
        std::uint16_t port = 0;
        std::thread accept_thread;
    };

    void accept_loop(Listener& listener);
    void serve_connection(const std::string& network_id, int fd);

    Simulator& sim_;
    std::vector<std::unique_ptr<Listener>> listeners_;
    mutable std::mutex conn_mu_;
    std::vector<std::thread> connections_;
    std::atomic<bool> stopping_{false};
    bool started_ = false;
};

// Client transport dialing the host/port carried in the target's payload.
// Keeps a small pool of connections per endpoint.
class TcpTransport : public RpcTransport {
public:
    TcpTransport() = default;
    ~TcpTransport() override;
    Result<Json> call(const ChainSpec& target, const std::string& method, Json params) override;

private:
    int acquire(const std::string& host, std::uint16_t port);
    void release(const std::string& host, std::uint16_t port, int fd);

    std::mutex pool_mu_;
    std::map<std::string, std::vector<int>> idle_;
    std::atomic<std::uint64_t> next_id_{1};
};

}  // namespace chaindns::netsim
