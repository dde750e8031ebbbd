// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "chaindns/result.hpp"
#include "chaindns/types.hpp"

namespace chaindns::netsim {

using Json = nlohmann::json;

struct RpcError {
    int code = 0;
    std::string message;
};

// One request/response pair. On the wire (newline-delimited JSON over local
// TCP, identical shapes in-process) a request is {"id","method","params"}
// and a response {"id","result"} or {"id","error":{"code","message"}}.
struct RpcEnvelope {
    std::uint64_t id = 0;
    std::string method;
    Json params = Json::array();
    Json result;
    std::optional<RpcError> error;

    bool is_error() const { return error.has_value(); }
};

inline constexpr int kRpcUnknownMethod = -32601;
inline constexpr int kRpcBadParams = -32602;
inline constexpr int kRpcNetworkUnreachable = -32001;
inline constexpr int kRpcBadRequest = -32600;

RpcEnvelope make_request(std::uint64_t id, std::string method, Json params);
RpcEnvelope make_result(const RpcEnvelope& req, Json result);
RpcEnvelope make_error(const RpcEnvelope& req, int code, std::string message);

std::string request_line(const RpcEnvelope& env);
std::string response_line(const RpcEnvelope& env);
std::optional<RpcEnvelope> parse_request_line(const std::string& line);
std::optional<RpcEnvelope> parse_response_line(const std::string& line);

// JSON shapes shared by the RPC surface and the clients.
Json chain_spec_json(const ChainSpec& spec);
std::optional<ChainSpec> chain_spec_from(const Json& j);
Json domain_info_json(const DomainInformation& info);
std::optional<DomainInformation> domain_info_from(const Json& j);

// Client-side transport abstraction over the envelope protocol. The target
// network is identified by the ChainSpec payload obtained through discovery
// (or, for the root network, from static configuration).
class RpcTransport {
public:
    virtual ~RpcTransport() = default;
    virtual Result<Json> call(const ChainSpec& target, const std::string& method, Json params) = 0;

    // Count of calls issued by the current thread; the benchmark's virtual
    // timing mode derives deterministic latencies from it.
    static std::uint64_t thread_call_count();
    static void reset_thread_call_count();

protected:
    static void bump_thread_call_count();
};

// Connection payloads used by the simulator: {"network": id} plus
// {"host", "port"} when the TCP gateway is enabled.
Bytes make_sim_payload(const std::string& network_id, const std::string& host = {},
                       std::uint16_t port = 0);
std::optional<std::string> payload_network_id(const ChainSpec& spec);
std::optional<std::pair<std::string, std::uint16_t>> payload_endpoint(const ChainSpec& spec);

}  // namespace chaindns::netsim
