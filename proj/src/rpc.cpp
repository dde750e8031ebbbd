// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/netsim/rpc.hpp"

namespace chaindns::netsim {

RpcEnvelope make_request(std::uint64_t id, std::string method, Json params) {
    RpcEnvelope env;
    env.id = id;
    env.method = std::move(method);
    env.params = std::move(params);
    return env;
}

RpcEnvelope make_result(const RpcEnvelope& req, Json result) {
    RpcEnvelope env;
    env.id = req.id;
    env.method = req.method;
    env.result = std::move(result);
    return env;
}

RpcEnvelope make_error(const RpcEnvelope& req, int code, std::string message) {
    RpcEnvelope env;
    env.id = req.id;
    env.method = req.method;
    env.error = RpcError{code, std::move(message)};
    return env;
}

std::string request_line(const RpcEnvelope& env) {
    Json j;
    j["id"] = env.id;
    j["method"] = env.method;
    j["params"] = env.params;
    return j.dump();
}

std::string response_line(const RpcEnvelope& env) {
    Json j;
    j["id"] = env.id;
    if (env.error) {
        j["error"] = Json{{"code", env.error->code}, {"message", env.error->message}};
    } else {
        j["result"] = env.result;
    }
    return j.dump();
}

std::optional<RpcEnvelope> parse_request_line(const std::string& line) {
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("id") || !j["id"].is_number_unsigned()) return std::nullopt;
    if (!j.contains("method") || !j["method"].is_string()) return std::nullopt;
    RpcEnvelope env;
    env.id = j["id"].get<std::uint64_t>();
    env.method = j["method"].get<std::string>();
    env.params = j.value("params", Json::array());
    if (!env.params.is_array()) return std::nullopt;
    return env;
}

std::optional<RpcEnvelope> parse_response_line(const std::string& line) {
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("id") || !j["id"].is_number_unsigned()) return std::nullopt;
    RpcEnvelope env;
    env.id = j["id"].get<std::uint64_t>();
    if (j.contains("error")) {
        const Json& e = j["error"];
        if (!e.is_object() || !e.contains("code") || !e.contains("message")) return std::nullopt;
        env.error = RpcError{e["code"].get<int>(), e["message"].get<std::string>()};
    } else if (j.contains("result")) {
        env.result = j["result"];
    } else {
        return std::nullopt;
    }
    return env;
}

Json chain_spec_json(const ChainSpec& spec) {
    Json j;
    j["name"] = spec.name;
    j["id"] = spec.id;
    j["payload_b64"] = base64_encode(spec.payload);
    return j;
}

std::optional<ChainSpec> chain_spec_from(const Json& j) {
    if (!j.is_object()) return std::nullopt;
    if (!j.contains("name") || !j["name"].is_string()) return std::nullopt;
    if (!j.contains("id") || !j["id"].is_string()) return std::nullopt;
    if (!j.contains("payload_b64") || !j["payload_b64"].is_string()) return std::nullopt;
    auto payload = base64_decode(j["payload_b64"].get<std::string>());
    if (!payload) return std::nullopt;
    ChainSpec spec;
    spec.name = j["name"].get<std::string>();
    spec.id = j["id"].get<std::string>();
    spec.payload = std::move(*payload);
    return spec;
}

Json domain_info_json(const DomainInformation& info) {
    Json j;
    j["creator"] = info.creator.hex();
    j["chain_spec"] = info.chain_specifications ? chain_spec_json(*info.chain_specifications)
                                                : Json(nullptr);
    Json maintainers = Json::array();
    for (const auto& m : info.maintainers) maintainers.push_back(m.hex());
    j["maintainers"] = std::move(maintainers);
    j["available"] = info.available;
    return j;
}

std::optional<DomainInformation> domain_info_from(const Json& j) {
    if (!j.is_object()) return std::nullopt;
    if (!j.contains("creator") || !j["creator"].is_string()) return std::nullopt;
    if (!j.contains("maintainers") || !j["maintainers"].is_array()) return std::nullopt;
    if (!j.contains("available") || !j["available"].is_boolean()) return std::nullopt;
    DomainInformation info;
    auto creator = AccountId::from_hex_str(j["creator"].get<std::string>());
    if (!creator) return std::nullopt;
    info.creator = *creator;
    if (j.contains("chain_spec") && !j["chain_spec"].is_null()) {
        auto spec = chain_spec_from(j["chain_spec"]);
        if (!spec) return std::nullopt;
        info.chain_specifications = std::move(*spec);
    }
    for (const auto& m : j["maintainers"]) {
        if (!m.is_string()) return std::nullopt;
        auto node = NodeId::from_hex_str(m.get<std::string>());
        if (!node) return std::nullopt;
        info.maintainers.push_back(*node);
    }
    info.available = j["available"].get<bool>();
    return info;
}

namespace {
thread_local std::uint64_t tl_rpc_calls = 0;
}

std::uint64_t RpcTransport::thread_call_count() { return tl_rpc_calls; }
void RpcTransport::reset_thread_call_count() { tl_rpc_calls = 0; }
void RpcTransport::bump_thread_call_count() { ++tl_rpc_calls; }

Bytes make_sim_payload(const std::string& network_id, const std::string& host,
                       std::uint16_t port) {
    Json j;
    j["network"] = network_id;
    if (port != 0) {
        j["host"] = host.empty() ? "127.0.0.1" : host;
        j["port"] = port;
    }
    return to_bytes(j.dump());
}

namespace {
std::optional<Json> parse_payload(const ChainSpec& spec) {
    Json j = Json::parse(to_string(spec.payload), nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    return j;
}
}  // namespace

std::optional<std::string> payload_network_id(const ChainSpec& spec) {
    auto j = parse_payload(spec);
    if (!j || !j->contains("network") || !(*j)["network"].is_string()) return std::nullopt;
    return (*j)["network"].get<std::string>();
}

std::optional<std::pair<std::string, std::uint16_t>> payload_endpoint(const ChainSpec& spec) {
    auto j = parse_payload(spec);
    if (!j || !j->contains("host") || !j->contains("port")) return std::nullopt;
    if (!(*j)["host"].is_string() || !(*j)["port"].is_number_unsigned()) return std::nullopt;
    return std::make_pair((*j)["host"].get<std::string>(),
                          static_cast<std::uint16_t>((*j)["port"].get<unsigned>()));
}

}  // namespace chaindns::netsim
