// Copyright (c) 2026 The chaindns developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.
#include "chaindns/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "chaindns/hash.hpp"
#include "chaindns/registry/asset.hpp"
#include "chaindns/registry/tld.hpp"

namespace chaindns::bench {

using netsim::Json;

namespace {

// Deterministic cost model for virtual timing: a fixed client overhead plus
// a fixed charge per transport round trip.
constexpr std::uint64_t kVirtualBaseNs = 50'000;
constexpr std::uint64_t kVirtualHopNs = 250'000;

std::string tld_network_id(const std::string& tld) { return "tld-" + tld; }

}  // namespace

Result<BenchPlan> plan_from_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return Errc::MalformedValue;
    BenchPlan plan;
    plan.seed = j.value("seed", plan.seed);
    plan.mode = j.value("mode", plan.mode);
    plan.timing = j.value("timing", plan.timing);
    plan.tick_ms = j.value("tick_ms", plan.tick_ms);
    plan.root_nodes = j.value("root_nodes", plan.root_nodes);
    if (j.contains("tlds")) {
        if (!j["tlds"].is_array()) return Errc::MalformedValue;
        plan.tlds.clear();
        for (const Json& t : j["tlds"]) {
            if (!t.is_object() || !t.contains("name")) return Errc::MalformedValue;
            TldPlan tp;
            tp.name = t["name"].get<std::string>();
            tp.nodes = t.value("nodes", 4u);
            tp.weight = t.value("weight", 1.0);
            plan.tlds.push_back(std::move(tp));
        }
    }
    if (j.contains("domains")) {
        if (j["domains"].is_number_unsigned()) {
            plan.domain_count = j["domains"].get<std::uint32_t>();
        } else if (j["domains"].is_array()) {
            for (const Json& d : j["domains"]) {
                if (!d.is_string()) return Errc::MalformedValue;
                plan.explicit_domains.push_back(d.get<std::string>());
            }
        } else {
            return Errc::MalformedValue;
        }
    }
    plan.distribution = j.value("distribution", plan.distribution);
    plan.min_maintainers = j.value("min_maintainers", plan.min_maintainers);
    plan.rps = j.value("rps", plan.rps);
    plan.duration_s = j.value("duration_s", plan.duration_s);
    plan.total_requests = j.value("total_requests", plan.total_requests);
    plan.concurrency = j.value("concurrency", plan.concurrency);
    plan.cache_capacity = j.value("cache_capacity", plan.cache_capacity);
    if (plan.mode != "inproc" && plan.mode != "tcp") return Errc::MalformedValue;
    if (plan.timing != "virtual" && plan.timing != "wall") return Errc::MalformedValue;
    if (plan.distribution != "uniform" && plan.distribution != "weighted") {
        return Errc::MalformedValue;
    }
    return plan;
}

Result<BenchPlan> plan_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return Errc::IoError;
    std::stringstream buffer;
    buffer << in.rdbuf();
    return plan_from_json(buffer.str());
}

namespace {

std::vector<std::string> plan_domains(const BenchPlan& plan) {
    if (!plan.explicit_domains.empty()) return plan.explicit_domains;
    std::vector<std::string> out;
    if (plan.tlds.empty()) return out;
    std::mt19937_64 rng(plan.seed * 0x9e3779b97f4a7c15ULL + 1);
    std::vector<double> cumulative;
    double total_weight = 0;
    for (const auto& tld : plan.tlds) {
        total_weight += std::max(0.0, tld.weight);
        cumulative.push_back(total_weight);
    }
    for (std::uint32_t i = 0; i < plan.domain_count; ++i) {
        std::size_t pick;
        if (plan.distribution == "weighted" && total_weight > 0) {
            double r = static_cast<double>(rng() >> 11) / 9007199254740992.0 * total_weight;
            pick = std::lower_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin();
            pick = std::min(pick, plan.tlds.size() - 1);
        } else {
            pick = i % plan.tlds.size();
        }
        out.push_back("net" + std::to_string(i) + "." + plan.tlds[pick].name);
    }
    return out;
}

}  // namespace

std::unique_ptr<Topology> orchestrate(const BenchPlan& plan, std::string* error) {
    auto fail = [&](const std::string& message) -> std::unique_ptr<Topology> {
        if (error) *error = message;
        return nullptr;
    };

    if (plan.rps > 0 && plan.duration_s > 0 && plan.total_requests > 0) {
        auto expected = static_cast<std::uint64_t>(plan.rps * plan.duration_s + 0.5);
        if (expected != plan.total_requests) {
            return fail("total_requests inconsistent with rps * duration_s");
        }
    }
    if (plan.tlds.empty()) return fail("plan declares no TLD networks");

    auto topo = std::make_unique<Topology>();
    topo->mode = plan.mode;
    topo->timing = plan.timing;
    topo->sim = std::make_unique<netsim::Simulator>(plan.seed, plan.tick_ms);

    netsim::NetworkConfig root_cfg;
    root_cfg.network_id = "root";
    root_cfg.node_count = plan.root_nodes;
    root_cfg.kind = ChainKind::Root;
    if (!topo->sim->spawn_network(root_cfg).ok()) return fail("failed to spawn root network");

    for (const auto& tld : plan.tlds) {
        netsim::NetworkConfig cfg;
        cfg.network_id = tld_network_id(tld.name);
        cfg.node_count = tld.nodes;
        cfg.kind = ChainKind::Tld;
        cfg.tld = tld.name;
        cfg.min_maintainers = plan.min_maintainers;
        if (!topo->sim->spawn_network(cfg).ok()) {
            return fail("failed to spawn TLD network " + tld.name);
        }
    }

    if (plan.mode == "tcp") {
        topo->gateway = std::make_unique<netsim::TcpGateway>(*topo->sim);
        if (!topo->gateway->start().ok()) return fail("failed to start TCP gateway");
        topo->transport = std::make_shared<netsim::TcpTransport>();
    } else {
        topo->transport = std::make_shared<netsim::InprocTransport>(*topo->sim);
    }

    auto payload_for = [&](const std::string& network_id) {
        std::uint16_t port = topo->gateway ? topo->gateway->port_of(network_id) : 0;
        return netsim::make_sim_payload(network_id, "127.0.0.1", port);
    };

    topo->root_spec = ChainSpec{"root", "root", payload_for("root")};

    // register every TLD on the root network
    netsim::Network* root = topo->sim->find("root");
    for (const auto& tld : plan.tlds) {
        ChainSpec spec{tld_network_id(tld.name), tld_network_id(tld.name),
                       payload_for(tld_network_id(tld.name))};
        root->submit_next(derive_account("tld-registrant:" + tld.name),
                          call::RegisterTld{tld.name, spec}, 1);
    }
    topo->sim->advance(1);
    {
        resolver::Resolver probe({topo->root_spec, 0, 0}, topo->transport);
        for (const auto& tld : plan.tlds) {
            auto reply = topo->transport->call(topo->root_spec, "root_queryTld",
                                               Json::array({tld.name}));
            if (!reply.ok() || reply.value().is_null()) {
                return fail("TLD registration failed for " + tld.name);
            }
        }
    }

    // claim every planned domain through the claiming protocol
    topo->domains = plan_domains(plan);
    std::set<std::string> seen;
    for (const auto& domain : topo->domains) {
        if (!seen.insert(domain).second) return fail("duplicate domain in plan: " + domain);
    }
    resolver::Resolver claimer({topo->root_spec, 0, 0}, topo->transport);
    for (const auto& domain : topo->domains) {
        std::vector<NodeId> maintainers;
        for (std::uint32_t i = 0; i < plan.min_maintainers; ++i) {
            maintainers.push_back(derive_node_id(plan.seed, "maintainer/" + domain, i));
        }
        ChainSpec spec{domain, domain, netsim::make_sim_payload("target:" + domain)};
        auto claimed =
            claimer.claim_domain(domain, spec, maintainers, derive_account("creator:" + domain));
        if (!claimed.ok()) {
            return fail("claim failed for " + domain + ": " +
                        std::string(errc_name(claimed.error())));
        }
    }
    topo->sim->advance(1);

    // completeness sweep: every planned domain must resolve
    resolver::Resolver sweeper({topo->root_spec, 0, 0}, topo->transport);
    for (const auto& domain : topo->domains) {
        auto resolved = sweeper.resolve(domain);
        if (!resolved.ok()) {
            return fail("domain not resolvable after setup: " + domain + " (" +
                        std::string(errc_name(resolved.error())) + ")");
        }
    }
    return topo;
}

double nearest_rank_percentile(std::vector<double> samples, double pct) {
    if (samples.empty()) return 0;
    std::sort(samples.begin(), samples.end());
    double rank = std::ceil(pct / 100.0 * static_cast<double>(samples.size()));
    auto index = static_cast<std::size_t>(std::max(1.0, rank)) - 1;
    return samples[std::min(index, samples.size() - 1)];
}

LatencyReport run_load(Topology& topology, const BenchPlan& plan) {
    LatencyReport report;
    report.seed = plan.seed;
    report.mode = plan.mode;
    report.timing = plan.timing;

    std::uint64_t total = plan.total_requests;
    if (total == 0 && plan.rps > 0 && plan.duration_s > 0) {
        total = static_cast<std::uint64_t>(plan.rps * plan.duration_s + 0.5);
    }
    if (total == 0 || topology.domains.empty()) return report;

    const bool virtual_timing = plan.timing == "virtual";
    // virtual timing requires request-independent costs, so the cache is off
    const std::size_t cache_capacity = virtual_timing ? 0 : plan.cache_capacity;
    resolver::Resolver load_resolver({topology.root_spec, cache_capacity, 60'000},
                                     topology.transport);

    std::vector<std::uint64_t> picks(total);
    std::mt19937_64 rng(plan.seed);
    for (auto& pick : picks) pick = rng() % topology.domains.size();

    report.samples.resize(total);
    const double ns_per_request = plan.rps > 0 ? 1e9 / plan.rps : 0;
    const auto run_start = std::chrono::steady_clock::now();

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        while (true) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= total) return;
            const std::string& domain = topology.domains[picks[i]];
            LoadSample& sample = report.samples[i];
            sample.request_index = i;
            auto scheduled_ns = static_cast<std::uint64_t>(ns_per_request * static_cast<double>(i));
            if (virtual_timing) {
                netsim::RpcTransport::reset_thread_call_count();
                auto resolved = load_resolver.resolve(domain);
                std::uint64_t hops = netsim::RpcTransport::thread_call_count();
                sample.start_ns = scheduled_ns;
                sample.latency_ms =
                    static_cast<double>(kVirtualBaseNs + hops * kVirtualHopNs) / 1e6;
                sample.outcome = resolved.ok() ? "ok" : std::string(errc_name(resolved.error()));
            } else {
                std::this_thread::sleep_until(run_start + std::chrono::nanoseconds(scheduled_ns));
                auto t0 = std::chrono::steady_clock::now();
                auto resolved = load_resolver.resolve(domain);
                auto t1 = std::chrono::steady_clock::now();
                sample.start_ns = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(t0 - run_start).count());
                sample.latency_ms =
                    static_cast<double>(
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()) /
                    1e6;
                sample.outcome = resolved.ok() ? "ok" : std::string(errc_name(resolved.error()));
            }
        }
    };

    std::vector<std::thread> threads;
    std::uint32_t thread_count = std::max(1u, plan.concurrency);
    threads.reserve(thread_count);
    for (std::uint32_t t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    report.count = total;
    std::vector<double> latencies;
    latencies.reserve(total);
    std::uint64_t horizon_s = 0;
    for (const auto& sample : report.samples) {
        if (sample.outcome == "ok") {
            ++report.success_count;
        } else {
            ++report.error_count;
        }
        latencies.push_back(sample.latency_ms);
        horizon_s = std::max<std::uint64_t>(horizon_s, sample.start_ns / 1'000'000'000ULL);
    }
    report.per_second.assign(horizon_s + 1, 0);
    for (const auto& sample : report.samples) {
        ++report.per_second[sample.start_ns / 1'000'000'000ULL];
    }
    report.median_ms = nearest_rank_percentile(latencies, 50);
    report.p95_ms = nearest_rank_percentile(latencies, 95);
    report.p99_ms = nearest_rank_percentile(latencies, 99);
    report.max_ms = *std::max_element(latencies.begin(), latencies.end());
    return report;
}

Result<void> report_emit(const LatencyReport& report, const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) return Errc::IoError;

    std::ofstream csv(std::filesystem::path(out_dir) / "load.csv", std::ios::binary);
    if (!csv) return Errc::IoError;
    csv << "request_index,start_ns,latency_ms,outcome\n";
    char latency_buf[64];
    for (const auto& sample : report.samples) {
        std::snprintf(latency_buf, sizeof(latency_buf), "%.6f", sample.latency_ms);
        csv << sample.request_index << ',' << sample.start_ns << ',' << latency_buf << ','
            << sample.outcome << '\n';
    }
    csv.close();
    if (!csv) return Errc::IoError;

    nlohmann::ordered_json summary;
    summary["count"] = report.count;
    summary["success_count"] = report.success_count;
    summary["error_count"] = report.error_count;
    summary["median_ms"] = report.median_ms;
    summary["p95_ms"] = report.p95_ms;
    summary["p99_ms"] = report.p99_ms;
    summary["max_ms"] = report.max_ms;
    summary["per_second"] = report.per_second;
    summary["seed"] = report.seed;
    summary["mode"] = report.mode;
    summary["timing"] = report.timing;
    std::ofstream json_out(std::filesystem::path(out_dir) / "summary.json", std::ios::binary);
    if (!json_out) return Errc::IoError;
    json_out << summary.dump(2) << '\n';
    json_out.close();
    if (!json_out) return Errc::IoError;
    return {};
}

StorageGrowth storage_growth(const StorageModel& model) {
    StorageGrowth growth;
    growth.single_network_mb_per_day = model.domain_growth_rate * model.string_size_mb;
    growth.top_tld_mb_per_day = growth.single_network_mb_per_day * model.tld_share;
    return growth;
}

bool run_demo(std::uint64_t seed, std::ostream& out) {
    out << "chaindns demo (seed " << seed << ")\n";
    BenchPlan plan;
    plan.seed = seed;
    plan.tlds = {{"chain", 4, 1.0}};
    plan.domain_count = 2;

    std::string error;
    auto topo = orchestrate(plan, &error);
    if (!topo) {
        out << "setup failed: " << error << "\n";
        return false;
    }
    out << "1. topology up: root + 1 TLD network (\"chain\"), 4 nodes each; "
        << topo->domains.size() << " domains pre-registered\n";

    resolver::Resolver client({topo->root_spec, 16, 600'000}, topo->transport,
                              [&sim = *topo->sim] { return sim.now_ms(); });

    // claim a fresh domain whose maintainer is a live TLD-network node
    netsim::Network* tld_net = topo->sim->find("tld-chain");
    NodeId maintainer = tld_net->node_at(2);
    AccountId owner = derive_account("demo-owner");
    ChainSpec beta_spec{"beta.chain", "beta.chain", netsim::make_sim_payload("target:beta.chain")};
    if (!client.claim_domain("beta.chain", beta_spec, {maintainer}, owner).ok()) {
        out << "claim failed\n";
        return false;
    }
    topo->sim->advance(1);
    auto resolved = client.resolve("beta.chain");
    if (!resolved.ok()) {
        out << "resolve after claim failed\n";
        return false;
    }
    out << "2. claimed beta.chain (maintainer: TLD node #2); resolve -> spec \""
        << resolved.value().name << "\"\n";

    // register assets; the off-chain worker validates them next block
    if (!client.register_assets("beta.chain", {"asset/alpha", "asset/bravo"}, owner).ok()) {
        out << "asset registration failed\n";
        return false;
    }
    topo->sim->advance(2);
    auto assets = client.resolve_asset("asset/alpha");
    if (!assets.ok() || assets.value().providers.size() != 1) {
        out << "asset lookup failed\n";
        return false;
    }
    out << "3. registered 2 assets for beta.chain; asset/alpha now served by "
        << assets.value().providers[0].first << "\n";

    // disconnect the maintainer: mandatory participation revokes the domain
    std::uint64_t h = tld_net->chain().head_number() + 1;
    topo->sim->inject_peer_event("tld-chain",
                                 {netsim::PeerEvent::Kind::Leave, maintainer, h});
    topo->sim->advance(2);
    auto after = client.resolve("beta.chain");
    client.flush_cache();
    after = client.resolve("beta.chain");
    if (after.ok() || after.error() != Errc::DomainRevoked) {
        out << "expected revocation, got "
            << (after.ok() ? "a spec" : std::string(errc_name(after.error()))) << "\n";
        return false;
    }
    out << "4. maintainer left at block " << h << "; domain revoked by block "
        << tld_net->chain().head_number() << " -> resolve now reports DomainRevoked\n";

    // provider re-verification sweeps the dead domain out of asset discovery
    topo->sim->advance(3);
    auto swept = client.resolve_asset("asset/alpha");
    if (!swept.ok()) return false;
    out << "5. re-verification removed beta.chain from asset lists (providers now "
        << swept.value().providers.size() << ", on-chain pending count "
        << assetreg::pending_count(*topo->sim->find("root")->chain().snapshot()) << ")\n";
    out << "demo complete\n";
    return true;
}

}  // namespace chaindns::bench
