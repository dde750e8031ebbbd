// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/netsim/tcp.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace chaindns::netsim {

namespace {

bool send_all(int fd, const std::string& data) {
    std::size_t sent = 0;
    while (sent < data.size()) {
        ssize_t n = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
        if (n <= 0) return false;
        sent += static_cast<std::size_t>(n);
    }
    return true;
}

// Reads until '\n'; false on EOF or error.
bool recv_line(int fd, std::string& line) {
    line.clear();
    char c;
    while (true) {
        ssize_t n = ::recv(fd, &c, 1, 0);
        if (n <= 0) return false;
        if (c == '\n') return true;
        line.push_back(c);
        if (line.size() > 16 * 1024 * 1024) return false;  // runaway frame
    }
}

int dial(const std::string& host, std::uint16_t port) {
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) return -1;
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1 ||
        ::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        ::close(fd);
        return -1;
    }
    int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    return fd;
}

}  // namespace

Result<void> TcpGateway::start() {
    if (started_) return {};
    for (const auto& network_id : sim_.network_ids()) {
        auto listener = std::make_unique<Listener>();
        listener->network_id = network_id;
        int fd = ::socket(AF_INET, SOCK_STREAM, 0);
        if (fd < 0) return Errc::IoError;
        int one = 1;
        ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
        sockaddr_in addr{};
        addr.sin_family = AF_INET;
        addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
        addr.sin_port = 0;  // ephemeral
        if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0 ||
            ::listen(fd, 64) != 0) {
            ::close(fd);
            return Errc::IoError;
        }
        socklen_t len = sizeof(addr);
        ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
        listener->port = ntohs(addr.sin_port);
        listener->fd.store(fd);
        listener->accept_thread = std::thread([this, raw = listener.get()] { accept_loop(*raw); });
        listeners_.push_back(std::move(listener));
    }
    started_ = true;
    return {};
}

void TcpGateway::stop() {
    if (!started_) return;
    stopping_.store(true);
    // wake the accept loops, join them, and only then close the sockets
    for (auto& listener : listeners_) {
        int fd = listener->fd.load();
        if (fd >= 0) ::shutdown(fd, SHUT_RDWR);
    }
    for (auto& listener : listeners_) {
        if (listener->accept_thread.joinable()) listener->accept_thread.join();
        int fd = listener->fd.exchange(-1);
        if (fd >= 0) ::close(fd);
    }
    std::vector<std::thread> conns;
    {
        std::lock_guard lock(conn_mu_);
        conns.swap(connections_);
    }
    for (auto& t : conns) {
        if (t.joinable()) t.join();
    }
    listeners_.clear();
    started_ = false;
    stopping_.store(false);
}

std::uint16_t TcpGateway::port_of(const std::string& network_id) const {
    for (const auto& listener : listeners_) {
        if (listener->network_id == network_id) return listener->port;
    }
    return 0;
}

void TcpGateway::accept_loop(Listener& listener) {
    while (!stopping_.load()) {
        int fd = listener.fd.load();
        if (fd < 0) return;
        int conn = ::accept(fd, nullptr, nullptr);
        if (conn < 0) {
            if (stopping_.load() || (errno != EINTR && errno != ECONNABORTED)) return;
            continue;
        }
        std::lock_guard lock(conn_mu_);
        connections_.emplace_back(
            [this, network_id = listener.network_id, conn] { serve_connection(network_id, conn); });
    }
}

void TcpGateway::serve_connection(const std::string& network_id, int fd) {
    std::string line;
    while (!stopping_.load() && recv_line(fd, line)) {
        if (line.empty()) continue;
        auto req = parse_request_line(line);
        RpcEnvelope resp;
        if (!req) {
            RpcEnvelope bad;
            resp = make_error(bad, kRpcBadRequest, "unparseable request");
        } else {
            resp = sim_.rpc(network_id, *req);
        }
        if (!send_all(fd, response_line(resp) + "\n")) break;
    }
    ::close(fd);
}

TcpTransport::~TcpTransport() {
    std::lock_guard lock(pool_mu_);
    for (auto& [endpoint, fds] : idle_) {
        for (int fd : fds) ::close(fd);
    }
}

int TcpTransport::acquire(const std::string& host, std::uint16_t port) {
    std::string endpoint = host + ":" + std::to_string(port);
    {
        std::lock_guard lock(pool_mu_);
        auto it = idle_.find(endpoint);
        if (it != idle_.end() && !it->second.empty()) {
            int fd = it->second.back();
            it->second.pop_back();
            return fd;
        }
    }
    return dial(host, port);
}

void TcpTransport::release(const std::string& host, std::uint16_t port, int fd) {
    std::lock_guard lock(pool_mu_);
    idle_[host + ":" + std::to_string(port)].push_back(fd);
}

Result<Json> TcpTransport::call(const ChainSpec& target, const std::string& method, Json params) {
    bump_thread_call_count();
    auto endpoint = payload_endpoint(target);
    if (!endpoint) return Errc::TransportError;
    const auto& [host, port] = *endpoint;

    int fd = acquire(host, port);
    if (fd < 0) return Errc::NetworkUnreachable;

    RpcEnvelope req = make_request(next_id_.fetch_add(1), method, std::move(params));
    std::string line;
    if (!send_all(fd, request_line(req) + "\n") || !recv_line(fd, line)) {
        ::close(fd);
        return Errc::TransportError;
    }
    auto resp = parse_response_line(line);
    if (!resp) {
        ::close(fd);
        return Errc::TransportError;
    }
    release(host, port, fd);
    if (resp->is_error()) {
        switch (resp->error->code) {
            case kRpcNetworkUnreachable: return Errc::NetworkUnreachable;
            case kRpcUnknownMethod: return Errc::UnknownMethod;
            default: return Errc::TransportError;
        }
    }
    return resp->result;
}

}  // namespace chaindns::netsim
